import { describe, expect, it, vi } from "vitest";
import { readFileSync } from "node:fs";
import { join } from "node:path";

import type { ConfigResponse } from "../src/api.js";
import { debounce } from "../src/api.js";
import {
  applyResponse,
  beginRequest,
  failRequest,
  initialState,
  legs,
  setArcAngle,
  setFamily,
  setTheta,
} from "../src/state.js";

function fixture(name: string): ConfigResponse {
  const path = join(__dirname, "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as ConfigResponse;
}

describe("state transitions", () => {
  it("clamps the arc angle into the open semicircle", () => {
    const s = initialState();
    setArcAngle(s, -20);
    expect(s.cAngleDeg).toBe(0.5);
    setArcAngle(s, 200);
    expect(s.cAngleDeg).toBe(179.5);
  });

  it("starts at the 3-4-5 triangle", () => {
    const { a, b } = legs(initialState());
    expect(a).toBeCloseTo(3, 3);
    expect(b).toBeCloseTo(4, 3);
  });

  it("clamps theta into the family domain on family change", () => {
    const s = initialState();
    setTheta(s, 140);
    expect(s.thetaDeg).toBe(140);
    setFamily(s, "pyramid");
    expect(s.thetaDeg).toBe(89.5);
    setFamily(s, "ziggurat");
    expect(s.thetaDeg).toBe(89.5);
  });
});

describe("last-write-wins response handling", () => {
  it("applies newer responses and discards stale ones", () => {
    const s = initialState();
    const r1 = fixture("config_3_4_90_ziggurat.json");
    const r2 = fixture("config_1_1_140_ziggurat.json");
    const seq1 = beginRequest(s);
    const seq2 = beginRequest(s);
    expect(applyResponse(s, seq2, r2)).toBe(true);
    // the older in-flight response must not overwrite the newer one
    expect(applyResponse(s, seq1, r1)).toBe(false);
    expect(s.lastResponse).toBe(r2);
    expect(s.pending).toBe(false);
  });

  it("keeps the pending marker while a newer request is in flight", () => {
    const s = initialState();
    const seq1 = beginRequest(s);
    beginRequest(s);
    applyResponse(s, seq1, fixture("config_3_4_90_ziggurat.json"));
    expect(s.pending).toBe(true);
  });

  it("retains the last good state on failure and surfaces a banner", () => {
    const s = initialState();
    const good = fixture("config_3_4_90_ziggurat.json");
    applyResponse(s, beginRequest(s), good);
    const seq = beginRequest(s);
    expect(failRequest(s, seq, "connection refused")).toBe(true);
    expect(s.error).toContain("connection refused");
    expect(s.lastResponse).toBe(good);
  });

  it("ignores stale failures after a newer success", () => {
    const s = initialState();
    const seqOld = beginRequest(s);
    const seqNew = beginRequest(s);
    applyResponse(s, seqNew, fixture("config_3_4_90_ziggurat.json"));
    expect(failRequest(s, seqOld, "late timeout")).toBe(false);
    expect(s.error).toBeNull();
  });
});

describe("debounce", () => {
  it("collapses a burst into one trailing call", () => {
    vi.useFakeTimers();
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v), 60);
    fn(1);
    vi.advanceTimersByTime(20);
    fn(2);
    vi.advanceTimersByTime(20);
    fn(3);
    vi.advanceTimersByTime(59);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
    vi.useRealTimers();
  });
});
