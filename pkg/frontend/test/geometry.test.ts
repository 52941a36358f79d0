import { describe, expect, it } from "vitest";

import {
  AB_LENGTH,
  applySimilarity,
  apexFromArc,
  clampArc,
  formatSig,
  inValidBand,
  isNearlyDegenerateTriangle,
  legsFromArc,
  projectToSemicircle,
  similarityFromSegments,
  thetaBands,
} from "../src/geometry.js";

describe("projectToSemicircle", () => {
  it("projects points in the upper half plane to their arc angle", () => {
    expect(projectToSemicircle({ x: 0, y: 1 })).toBeCloseTo(90, 10);
    expect(projectToSemicircle({ x: 1, y: 1 })).toBeCloseTo(45, 10);
    expect(projectToSemicircle({ x: -1, y: 1 })).toBeCloseTo(135, 10);
  });

  it("clamps points below the diameter to the nearer arc end", () => {
    expect(projectToSemicircle({ x: 2, y: -0.3 })).toBe(0.5);
    expect(projectToSemicircle({ x: -2, y: -0.3 })).toBe(179.5);
  });

  it("keeps the apex strictly inside the open semicircle", () => {
    expect(projectToSemicircle({ x: 5, y: 1e-9 })).toBeGreaterThanOrEqual(0.5);
    expect(projectToSemicircle({ x: -5, y: 1e-9 })).toBeLessThanOrEqual(179.5);
    expect(clampArc(999)).toBe(179.5);
    expect(clampArc(-5)).toBe(0.5);
  });

  it("handles the degenerate pointer at the center", () => {
    expect(projectToSemicircle({ x: 0, y: 0 })).toBe(90);
  });
});

describe("legsFromArc", () => {
  it("gives the isosceles configuration at the apex of the arc", () => {
    const { a, b } = legsFromArc(90);
    expect(a).toBeCloseTo(b, 12);
  });

  it("sends a to zero as C approaches B", () => {
    const { a, b } = legsFromArc(0.5);
    expect(a).toBeLessThan(0.05);
    expect(b).toBeCloseTo(AB_LENGTH, 3);
  });

  it("keeps the right-angle invariant to display precision for any drag", () => {
    // the Thales guarantee surfaced to the user: a^2 + b^2 = c^2
    for (let i = 0; i <= 1000; i++) {
      const phi = 0.5 + (179 * i) / 1000;
      const { a, b } = legsFromArc(phi);
      expect(formatSig(a * a + b * b)).toBe(formatSig(AB_LENGTH * AB_LENGTH));
    }
  });

  it("matches the apex position on the circle", () => {
    const apex = apexFromArc(73.74);
    const radius = AB_LENGTH / 2;
    expect(Math.hypot(apex.x, apex.y)).toBeCloseTo(radius, 12);
  });
});

describe("degenerate-triangle warning", () => {
  it("warns only near the arc ends", () => {
    const near = legsFromArc(2);
    expect(isNearlyDegenerateTriangle(near.a, near.b)).toBe(true);
    const mid = legsFromArc(80);
    expect(isNearlyDegenerateTriangle(mid.a, mid.b)).toBe(false);
  });
});

describe("theta bands", () => {
  it("marks the ziggurat validity range", () => {
    const bands = thetaBands("ziggurat");
    expect(bands).toEqual({ min: 20, max: 175, validMin: 60, validMax: 135 });
    expect(inValidBand("ziggurat", 90)).toBe(true);
    expect(inValidBand("ziggurat", 140)).toBe(false);
    expect(inValidBand("ziggurat", 50)).toBe(false);
  });

  it("marks the pyramid validity range", () => {
    expect(inValidBand("pyramid", 45)).toBe(true);
    expect(inValidBand("pyramid", 89.5)).toBe(true);
    expect(inValidBand("pyramid", 40)).toBe(false);
  });
});

describe("formatSig", () => {
  it("formats to six significant digits", () => {
    expect(formatSig(25.000000000000004)).toBe("25");
    expect(formatSig(3.14159265)).toBe("3.14159");
    expect(formatSig(0.000123456789)).toBe("0.000123457");
  });
});

describe("similarity mapping", () => {
  it("anchors a segment exactly and preserves orientation", () => {
    const map = similarityFromSegments(
      { x: 4, y: 0 }, { x: 0, y: 3 },   // response A, B
      { x: 100, y: 50 }, { x: 300, y: 50 }, // screen anchors (y-up space)
    );
    const a = applySimilarity(map, { x: 4, y: 0 });
    const b = applySimilarity(map, { x: 0, y: 3 });
    expect(a.x).toBeCloseTo(100, 9);
    expect(a.y).toBeCloseTo(50, 9);
    expect(b.x).toBeCloseTo(300, 9);
    expect(b.y).toBeCloseTo(50, 9);
    // C = (0,0) is left of A->B in the response, so it must map above
    const c = applySimilarity(map, { x: 0, y: 0 });
    expect(c.y).toBeGreaterThan(50);
  });

  it("scales distances uniformly", () => {
    const map = similarityFromSegments(
      { x: 0, y: 0 }, { x: 2, y: 0 },
      { x: 0, y: 0 }, { x: 0, y: 4 },
    );
    const p = applySimilarity(map, { x: 1, y: 1 });
    expect(Math.hypot(p.x, p.y)).toBeCloseTo(Math.hypot(1, 1) * 2, 9);
  });
});
