import type { CheckRecord, ConfigResponse } from "./api.js";
import { AB_LENGTH, formatSig } from "./geometry.js";
import { legs, type ExplorerState } from "./state.js";

export interface ReportModel {
  pieceLabel: string;
  areaA: string;
  areaB: string;
  areaC: string;
  sumAB: string;
  residual: string; // formatted, or "skipped (degenerate)"
  residualOk: boolean | null; // null when skipped
  lemmaStatus: string;
  auditVerdicts: { name: string; status: string }[];
  exactBadge: string | null; // e.g. "5 + 2√2" when the exact record ran
  degeneracyFlags: string[];
  thalesLine: string; // displayed a^2 + b^2 = c^2 invariant
  rightAngleHolds: boolean;
}

function findCheck(response: ConfigResponse, name: string): CheckRecord | undefined {
  return response.verification.checks.find((c) => c.name === name);
}

export function buildReportModel(state: ExplorerState): ReportModel | null {
  const response = state.lastResponse;
  if (!response) {
    return null;
  }
  const family = response.verification.family;
  const key = family === "pyramid" ? "pyramid" : "ziggurat";
  const areaA = response.areas[`${key}_a`];
  const areaB = response.areas[`${key}_b`];
  const areaC = response.areas[`${key}_c`];

  const additivity = findCheck(response, "theorem_additivity");
  let residual = "skipped (degenerate)";
  let residualOk: boolean | null = null;
  if (additivity && additivity.status !== "degenerate-skip") {
    const rel = Math.abs(areaC - areaA - areaB) / Math.max(areaC, 1e-300);
    residual = formatSig(rel, 3);
    residualOk = additivity.status === "pass";
  }

  const lemmaName = family === "pyramid" ? "parallelogram_closure" : "lemma_parallelograms";
  const lemma = findCheck(response, lemmaName);

  const auditNames = family === "pyramid"
    ? ["decomposition_master", "pyramid_scalar_identity"]
    : ["decomposition_hypotenuse", "decomposition_legs", "central_parallelogram_formula"];
  const auditVerdicts = auditNames
    .map((name) => findCheck(response, name))
    .filter((c): c is CheckRecord => c !== undefined)
    .map((c) => ({ name: c.name, status: c.status }));

  const exact = findCheck(response, "exact_special_angle");
  const exactBadge =
    exact && exact.status === "pass" ? String(exact.measured["lhs"] ?? "exact") : null;

  const { a, b } = legs(state);
  const sumSquares = a * a + b * b;
  const cSquared = AB_LENGTH * AB_LENGTH;
  const thalesLine =
    `a² + b² = ${formatSig(sumSquares)} = c² = ${formatSig(cSquared)}`;

  return {
    pieceLabel: key,
    areaA: formatSig(areaA),
    areaB: formatSig(areaB),
    areaC: formatSig(areaC),
    sumAB: formatSig(areaA + areaB),
    residual,
    residualOk,
    lemmaStatus: lemma ? lemma.status : "n/a",
    auditVerdicts,
    exactBadge,
    degeneracyFlags: Object.entries(response.degeneracy)
      .filter(([, v]) => v)
      .map(([k]) => k),
    thalesLine,
    rightAngleHolds: formatSig(sumSquares) === formatSig(cSquared),
  };
}

const STATUS_SYMBOL: Record<string, string> = {
  pass: "✓",
  fail: "✗",
  "degenerate-skip": "–",
  discrepancy: "⚠",
};

export function renderReportPanel(panel: HTMLElement, state: ExplorerState): void {
  const model = buildReportModel(state);
  if (!model) {
    panel.innerHTML = '<p class="muted">waiting for the first response…</p>';
    return;
  }
  const rows: string[] = [];
  rows.push(`<div class="row heading">${model.pieceLabel} areas</div>`);
  rows.push(
    `<div class="row">${model.areaA} + ${model.areaB} = ${model.sumAB} ` +
    `vs ${model.areaC}${model.residualOk ? " ✓" : ""}</div>`,
  );
  const badge = model.residualOk === null
    ? `<span class="badge skip">${model.residual}</span>`
    : `<span class="badge ${model.residualOk ? "ok" : "bad"}">residual ${model.residual}</span>`;
  rows.push(`<div class="row">${badge}${
    model.exactBadge ? ` <span class="badge exact">exact: ${model.exactBadge}</span>` : ""
  }</div>`);
  rows.push(`<div class="row">lemma: ${STATUS_SYMBOL[model.lemmaStatus] ?? ""} ${model.lemmaStatus}</div>`);
  for (const v of model.auditVerdicts) {
    rows.push(`<div class="row audit">${v.name}: ${STATUS_SYMBOL[v.status] ?? ""} ${v.status}</div>`);
  }
  if (model.degeneracyFlags.length > 0) {
    rows.push(
      `<div class="row flags">${model.degeneracyFlags
        .map((f) => `<span class="chip">${f}</span>`)
        .join(" ")}</div>`,
    );
  }
  rows.push(`<div class="row thales">${model.thalesLine}</div>`);
  panel.innerHTML = rows.join("\n");
}
