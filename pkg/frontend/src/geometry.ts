// The only geometry the explorer performs itself: projecting the dragged
// apex onto the Thales semicircle over the fixed segment AB, and mapping
// coordinates for display. Everything else comes from the service.

export interface Vec {
  x: number;
  y: number;
}

// Fixed hypotenuse length: AB is the diameter of the control circle, so the
// right angle at C is guaranteed by construction (Thales).
export const AB_LENGTH = 5;

// Keep C strictly inside the open upper semicircle.
export const MIN_ARC_DEG = 0.5;
export const MAX_ARC_DEG = 179.5;

// Below this leg fraction the triangle is flagged as nearly degenerate.
export const DEGENERATE_LEG_FRACTION = 0.05;

export function clampArc(phiDeg: number): number {
  return Math.min(MAX_ARC_DEG, Math.max(MIN_ARC_DEG, phiDeg));
}

/**
 * Project a pointer position (relative to the circle center, mathematical
 * y-up orientation) to an arc angle in degrees. Points below the diameter
 * clamp to the nearer end of the arc.
 */
export function projectToSemicircle(p: Vec): number {
  if (p.x === 0 && p.y === 0) {
    return 90;
  }
  if (p.y <= 0) {
    return p.x > 0 ? MIN_ARC_DEG : MAX_ARC_DEG;
  }
  const phi = (Math.atan2(p.y, p.x) * 180) / Math.PI;
  return clampArc(phi);
}

/**
 * Legs of the right triangle for an apex at arc angle phi on the circle of
 * diameter AB: a = |CB|, b = |CA|. By construction a^2 + b^2 = AB^2.
 */
export function legsFromArc(phiDeg: number, diameter: number = AB_LENGTH): { a: number; b: number } {
  const half = (phiDeg * Math.PI) / 360;
  return {
    a: diameter * Math.sin(half),
    b: diameter * Math.cos(half),
  };
}

export function apexFromArc(phiDeg: number, diameter: number = AB_LENGTH): Vec {
  const r = diameter / 2;
  const rad = (phiDeg * Math.PI) / 180;
  return { x: r * Math.cos(rad), y: r * Math.sin(rad) };
}

export function isNearlyDegenerateTriangle(a: number, b: number,
                                           diameter: number = AB_LENGTH): boolean {
  return Math.min(a, b) < DEGENERATE_LEG_FRACTION * diameter;
}

/** Format to a fixed number of significant digits for display. */
export function formatSig(x: number, digits = 6): string {
  if (!isFinite(x)) {
    return String(x);
  }
  return String(Number(x.toPrecision(digits)));
}

export type Family = "ziggurat" | "pyramid";

export interface ThetaBands {
  min: number;
  max: number;
  validMin: number;
  validMax: number;
}

/** Slider domain and the theorem's valid band for each family. */
export function thetaBands(family: Family): ThetaBands {
  if (family === "pyramid") {
    return { min: 20, max: 89.5, validMin: 45, validMax: 89.5 };
  }
  return { min: 20, max: 175, validMin: 60, validMax: 135 };
}

export function inValidBand(family: Family, theta: number): boolean {
  const bands = thetaBands(family);
  return theta >= bands.validMin && theta <= bands.validMax;
}

/**
 * Complex similarity sending a source segment to a target segment; used to
 * anchor the response's A and B onto the fixed on-screen segment.
 */
export interface Similarity {
  kRe: number;
  kIm: number;
  srcA: Vec;
  dstA: Vec;
}

export function similarityFromSegments(srcA: Vec, srcB: Vec, dstA: Vec, dstB: Vec): Similarity {
  const u = { x: srcB.x - srcA.x, y: srcB.y - srcA.y };
  const v = { x: dstB.x - dstA.x, y: dstB.y - dstA.y };
  const n = u.x * u.x + u.y * u.y;
  return {
    kRe: (v.x * u.x + v.y * u.y) / n,
    kIm: (v.y * u.x - v.x * u.y) / n,
    srcA,
    dstA,
  };
}

export function applySimilarity(t: Similarity, p: Vec): Vec {
  const dx = p.x - t.srcA.x;
  const dy = p.y - t.srcA.y;
  return {
    x: t.dstA.x + t.kRe * dx - t.kIm * dy,
    y: t.dstA.y + t.kIm * dx + t.kRe * dy,
  };
}
