import type { ConfigResponse } from "./api.js";
import { clampArc, legsFromArc, thetaBands, type Family } from "./geometry.js";

export interface ExplorerState {
  cAngleDeg: number; // position of C along the arc, open (0, 180)
  thetaDeg: number;
  family: Family;
  lastResponse: ConfigResponse | null;
  // last-write-wins sequencing: a response is applied only if it is newer
  // than everything applied so far, so stale fetches never overwrite
  requestSeq: number;
  appliedSeq: number;
  pending: boolean;
  error: string | null;
}

export function initialState(): ExplorerState {
  return {
    cAngleDeg: 73.74, // 3-4-5 triangle: a = 3, b = 4
    thetaDeg: 90,
    family: "ziggurat",
    lastResponse: null,
    requestSeq: 0,
    appliedSeq: 0,
    pending: false,
    error: null,
  };
}

export function legs(state: ExplorerState): { a: number; b: number } {
  return legsFromArc(state.cAngleDeg);
}

export function setArcAngle(state: ExplorerState, phiDeg: number): void {
  state.cAngleDeg = clampArc(phiDeg);
}

export function setTheta(state: ExplorerState, thetaDeg: number): void {
  const bands = thetaBands(state.family);
  state.thetaDeg = Math.min(bands.max, Math.max(bands.min, thetaDeg));
}

export function setFamily(state: ExplorerState, family: Family): void {
  state.family = family;
  setTheta(state, state.thetaDeg); // re-clamp into the family's domain
}

/** Returns the sequence number identifying the request about to be sent. */
export function beginRequest(state: ExplorerState): number {
  state.requestSeq += 1;
  state.pending = true;
  return state.requestSeq;
}

/** Apply a completed response; returns false (no-op) when it is stale. */
export function applyResponse(state: ExplorerState, seq: number,
                              response: ConfigResponse): boolean {
  if (seq <= state.appliedSeq) {
    return false;
  }
  state.appliedSeq = seq;
  state.lastResponse = response;
  state.error = null;
  if (seq === state.requestSeq) {
    state.pending = false;
  }
  return true;
}

/** Record a failed request; the last good response is retained. */
export function failRequest(state: ExplorerState, seq: number, message: string): boolean {
  if (seq <= state.appliedSeq) {
    return false;
  }
  state.appliedSeq = seq;
  state.error = message;
  if (seq === state.requestSeq) {
    state.pending = false;
  }
  return true;
}
