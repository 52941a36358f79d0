import type { ConfigResponse } from "./api.js";
import {
  apexFromArc,
  applySimilarity,
  similarityFromSegments,
  type Similarity,
  type Vec,
} from "./geometry.js";
import type { ExplorerState } from "./state.js";

// On-screen anchors for the fixed segment AB (canvas pixels). The response's
// A and B are mapped onto these, so the whole configuration follows the
// dragged apex while AB stays put.
export interface CanvasFrame {
  width: number;
  height: number;
  aPx: Vec;
  bPx: Vec;
}

export function defaultFrame(width: number, height: number): CanvasFrame {
  const span = Math.min(width, height) * 0.3;
  return {
    width,
    height,
    aPx: { x: width / 2 - span / 2, y: height * 0.52 },
    bPx: { x: width / 2 + span / 2, y: height * 0.52 },
  };
}

const FILL: Record<string, string> = {
  ziggurat_a: "rgba(127, 184, 216, 0.55)",
  ziggurat_b: "rgba(143, 207, 159, 0.55)",
  ziggurat_c: "rgba(242, 193, 78, 0.55)",
  pyramid_a: "rgba(127, 184, 216, 0.55)",
  pyramid_b: "rgba(143, 207, 159, 0.55)",
  pyramid_c: "rgba(242, 193, 78, 0.55)",
  triangle: "rgba(232, 145, 124, 0.55)",
  central_triangle: "rgba(232, 145, 124, 0.4)",
  corner_triangle_a: "rgba(232, 145, 124, 0.4)",
  corner_triangle_b: "rgba(232, 145, 124, 0.4)",
  central_parallelogram: "rgba(185, 167, 209, 0.5)",
  side_parallelogram_a: "rgba(185, 167, 209, 0.5)",
  side_parallelogram_b: "rgba(185, 167, 209, 0.5)",
};

// Painting order: big pieces first, master outline on top.
const DRAW_ORDER = [
  "ziggurat_a", "ziggurat_b", "ziggurat_c",
  "pyramid_a", "pyramid_b", "pyramid_c",
  "central_parallelogram", "side_parallelogram_a", "side_parallelogram_b",
  "triangle", "central_triangle", "corner_triangle_a", "corner_triangle_b",
  "master",
];

export interface PolygonStyle {
  fill: string | null;
  stroke: string;
  lineWidth: number;
  dashed: boolean;
  highlighted: boolean;
}

/** Styling of one polygon given the document's degeneracy flags. */
export function styleForPolygon(name: string, areas: Record<string, number>,
                                flags: Record<string, boolean>,
                                worldScale: number): PolygonStyle {
  if (name === "master") {
    return { fill: null, stroke: "#1d1d1f", lineWidth: 2.2, dashed: false, highlighted: false };
  }
  const degenerateArea = Math.abs(areas[name] ?? 0) <= 1e-9 * worldScale * worldScale;
  const overlap = Boolean(flags["leg_ziggurats_overlap"])
    && (name === "ziggurat_a" || name === "ziggurat_b");
  const selfIntersecting = Boolean(flags["ziggurat_self_intersection"])
    && name.startsWith("ziggurat");
  return {
    fill: degenerateArea ? null : FILL[name] ?? "rgba(160,160,160,0.4)",
    stroke: overlap ? "#c1121f" : "#333333",
    lineWidth: overlap ? 2.4 : 1.2,
    dashed: degenerateArea || selfIntersecting,
    highlighted: overlap,
  };
}

function toScreen(map: Similarity, p: [number, number], frame: CanvasFrame): Vec {
  // orientation-preserving similarity into y-up pixel space, then one flip
  const mapped = applySimilarity(map, { x: p[0], y: p[1] });
  return { x: mapped.x, y: frame.height - mapped.y };
}

export function drawScene(ctx: CanvasRenderingContext2D, frame: CanvasFrame,
                          state: ExplorerState): void {
  ctx.clearRect(0, 0, frame.width, frame.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, frame.width, frame.height);

  drawControlCircle(ctx, frame, state);
  const response = state.lastResponse;
  if (!response) {
    return;
  }

  const srcA = response.named_points["A"];
  const srcB = response.named_points["B"];
  if (!srcA || !srcB) {
    return;
  }
  // anchors expressed in y-up pixel space; toScreen applies the final flip
  const mathA = { x: frame.aPx.x, y: frame.height - frame.aPx.y };
  const mathB = { x: frame.bPx.x, y: frame.height - frame.bPx.y };
  const map = similarityFromSegments(
    { x: srcA[0], y: srcA[1] }, { x: srcB[0], y: srcB[1] }, mathA, mathB);

  const worldScale = Math.max(
    ...Object.values(response.named_points).flatMap(([x, y]) => [Math.abs(x), Math.abs(y)]),
    1,
  );

  for (const name of DRAW_ORDER) {
    const cycle = response.polygons[name];
    if (!cycle) {
      continue;
    }
    const style = styleForPolygon(name, response.areas, response.degeneracy, worldScale);
    ctx.beginPath();
    cycle.forEach((pointName, i) => {
      const p = toScreen(map, response.named_points[pointName], frame);
      if (i === 0) ctx.moveTo(p.x, p.y);
      else ctx.lineTo(p.x, p.y);
    });
    ctx.closePath();
    if (style.fill) {
      ctx.fillStyle = style.highlighted ? "rgba(193, 18, 31, 0.25)" : style.fill;
      ctx.fill();
    }
    ctx.setLineDash(style.dashed ? [6, 4] : []);
    ctx.strokeStyle = style.stroke;
    ctx.lineWidth = style.lineWidth;
    ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.font = "12px sans-serif";
  ctx.fillStyle = "#111111";
  for (const [name, coords] of Object.entries(response.named_points)) {
    const p = toScreen(map, coords, frame);
    ctx.beginPath();
    ctx.arc(p.x, p.y, 2.5, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(name, p.x + 5, p.y - 5);
  }
}

function drawControlCircle(ctx: CanvasRenderingContext2D, frame: CanvasFrame,
                           state: ExplorerState): void {
  const center = {
    x: (frame.aPx.x + frame.bPx.x) / 2,
    y: (frame.aPx.y + frame.bPx.y) / 2,
  };
  const radius = Math.hypot(frame.bPx.x - frame.aPx.x, frame.bPx.y - frame.aPx.y) / 2;
  ctx.beginPath();
  ctx.setLineDash([4, 4]);
  ctx.strokeStyle = "#8a8a8e";
  ctx.lineWidth = 1;
  // upper semicircle in canvas coordinates (y grows downward)
  ctx.arc(center.x, center.y, radius, Math.PI, 2 * Math.PI);
  ctx.stroke();
  ctx.setLineDash([]);

  const c = cHandlePosition(frame, state.cAngleDeg);
  ctx.beginPath();
  ctx.arc(c.x, c.y, 7, 0, 2 * Math.PI);
  ctx.fillStyle = state.pending ? "#f2a65a" : "#2a6f97";
  ctx.fill();
  ctx.strokeStyle = "#103a52";
  ctx.lineWidth = 1.5;
  ctx.stroke();
}

/** Screen position of the draggable apex handle. */
export function cHandlePosition(frame: CanvasFrame, cAngleDeg: number): Vec {
  const center = {
    x: (frame.aPx.x + frame.bPx.x) / 2,
    y: (frame.aPx.y + frame.bPx.y) / 2,
  };
  const radius = Math.hypot(frame.bPx.x - frame.aPx.x, frame.bPx.y - frame.aPx.y) / 2;
  // A sits at arc angle 180 (left), B at 0 (right); canvas y is flipped
  const world = apexFromArc(cAngleDeg, 2 * radius);
  return { x: center.x + world.x, y: center.y - world.y };
}

/** Pointer position (canvas pixels) to circle-centered mathematical coords. */
export function pointerToCircleFrame(frame: CanvasFrame, px: number, py: number): Vec {
  const center = {
    x: (frame.aPx.x + frame.bPx.x) / 2,
    y: (frame.aPx.y + frame.bPx.y) / 2,
  };
  return { x: px - center.x, y: center.y - py };
}
