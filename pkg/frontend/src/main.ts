import { debounce, fetchConfig, fetchHealth } from "./api.js";
import { inValidBand, thetaBands, type Family } from "./geometry.js";
import { renderReportPanel } from "./report.js";
import {
  cHandlePosition,
  defaultFrame,
  drawScene,
  pointerToCircleFrame,
} from "./render.js";
import { projectToSemicircle } from "./geometry.js";
import {
  applyResponse,
  beginRequest,
  failRequest,
  initialState,
  legs,
  setArcAngle,
  setFamily,
  setTheta,
} from "./state.js";

const API_BASE = "";
const DEBOUNCE_MS = 60;
const HANDLE_HIT_RADIUS = 14;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

function start(): void {
  const canvas = byId<HTMLCanvasElement>("scene");
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    throw new Error("canvas 2d context unavailable");
  }
  const frame = defaultFrame(canvas.width, canvas.height);
  const state = initialState();

  const slider = byId<HTMLInputElement>("theta");
  const thetaValue = byId<HTMLSpanElement>("theta-value");
  const familySelect = byId<HTMLSelectElement>("family");
  const legsLabel = byId<HTMLSpanElement>("legs");
  const banner = byId<HTMLDivElement>("banner");
  const panel = byId<HTMLDivElement>("report");

  function redraw(): void {
    drawScene(ctx!, frame, state);
    renderReportPanel(panel, state);
    const { a, b } = legs(state);
    legsLabel.textContent = `a = ${a.toFixed(4)}, b = ${b.toFixed(4)}`;
    thetaValue.textContent = `${state.thetaDeg.toFixed(1)}°`;
    const warn = Math.min(a, b) < 0.25;
    banner.textContent = state.error
      ? `service error: ${state.error} (showing last good state)`
      : warn ? "nearly degenerate triangle: one leg is almost zero" : "";
    banner.className = state.error ? "banner error" : warn ? "banner warn" : "banner";
    updateSliderBand();
  }

  function updateSliderBand(): void {
    const bands = thetaBands(state.family as Family);
    slider.min = String(bands.min);
    slider.max = String(bands.max);
    const lo = ((bands.validMin - bands.min) / (bands.max - bands.min)) * 100;
    const hi = ((bands.validMax - bands.min) / (bands.max - bands.min)) * 100;
    slider.style.background =
      `linear-gradient(to right, #e9c8c4 0%, #e9c8c4 ${lo}%, ` +
      `#bfe3c0 ${lo}%, #bfe3c0 ${hi}%, #e9c8c4 ${hi}%, #e9c8c4 100%)`;
    slider.classList.toggle("degenerate",
      !inValidBand(state.family as Family, state.thetaDeg));
  }

  function refetchNow(): void {
    const seq = beginRequest(state);
    const { a, b } = legs(state);
    fetchConfig(API_BASE, { a, b, theta: state.thetaDeg, family: state.family })
      .then((response) => {
        if (applyResponse(state, seq, response)) {
          redraw();
        }
      })
      .catch((err: Error) => {
        if (failRequest(state, seq, err.message)) {
          redraw();
        }
      });
    redraw(); // show pending handle color immediately
  }

  const refetch = debounce(refetchNow, DEBOUNCE_MS);

  // -- apex dragging -------------------------------------------------------
  let dragging = false;

  function pointerPos(ev: PointerEvent): { x: number; y: number } {
    const rect = canvas.getBoundingClientRect();
    return {
      x: ((ev.clientX - rect.left) / rect.width) * canvas.width,
      y: ((ev.clientY - rect.top) / rect.height) * canvas.height,
    };
  }

  canvas.addEventListener("pointerdown", (ev) => {
    const pos = pointerPos(ev);
    const handle = cHandlePosition(frame, state.cAngleDeg);
    if (Math.hypot(pos.x - handle.x, pos.y - handle.y) <= HANDLE_HIT_RADIUS) {
      dragging = true;
      canvas.setPointerCapture(ev.pointerId);
    }
  });

  canvas.addEventListener("pointermove", (ev) => {
    if (!dragging) {
      return;
    }
    const pos = pointerPos(ev);
    const local = pointerToCircleFrame(frame, pos.x, pos.y);
    setArcAngle(state, projectToSemicircle(local));
    redraw();
    refetch();
  });

  const stopDrag = () => {
    dragging = false;
  };
  canvas.addEventListener("pointerup", stopDrag);
  canvas.addEventListener("pointercancel", stopDrag);

  // -- controls -------------------------------------------------------------
  slider.addEventListener("input", () => {
    setTheta(state, Number(slider.value));
    redraw();
    refetch();
  });

  familySelect.addEventListener("change", () => {
    setFamily(state, familySelect.value as Family);
    slider.value = String(state.thetaDeg);
    redraw();
    refetchNow();
  });

  slider.value = String(state.thetaDeg);
  fetchHealth(API_BASE)
    .then(() => refetchNow())
    .catch((err: Error) => {
      state.error = `health check failed: ${err.message}`;
      redraw();
    });
  redraw();
}

start();
