// Typed client for the local verification service.

export interface CheckRecord {
  name: string;
  claim: string;
  status: "pass" | "fail" | "degenerate-skip" | "discrepancy";
  measured: Record<string, number | string>;
  tolerance: number | null;
}

export interface VerificationBlock {
  family: string;
  inputs: { a: number; b: number; theta_degrees: number };
  exact: boolean;
  passed: boolean;
  checks: CheckRecord[];
}

export interface ConfigResponse {
  named_points: Record<string, [number, number]>;
  polygons: Record<string, string[]>;
  areas: Record<string, number>;
  degeneracy: Record<string, boolean>;
  verification: VerificationBlock;
  constants: {
    theta_degrees: number;
    C_theta: number;
    similarity_ratio: number;
    r_theta: number | null;
    D_theta: number | null;
  };
}

export interface ConfigParams {
  a: number;
  b: number;
  theta: number;
  family: string;
}

export async function fetchConfig(base: string, params: ConfigParams): Promise<ConfigResponse> {
  const q = new URLSearchParams({
    a: String(params.a),
    b: String(params.b),
    theta: String(params.theta),
    family: params.family,
  });
  const res = await fetch(`${base}/api/config?${q.toString()}`);
  if (!res.ok) {
    let detail = `${res.status}`;
    try {
      const body = await res.json();
      if (body && body.error) detail = body.error;
    } catch {
      // keep the status code
    }
    throw new Error(`config request failed: ${detail}`);
  }
  return (await res.json()) as ConfigResponse;
}

export async function fetchHealth(base: string): Promise<{ status: string; version: string }> {
  const res = await fetch(`${base}/api/health`);
  if (!res.ok) {
    throw new Error(`health request failed: ${res.status}`);
  }
  return res.json();
}

/**
 * Trailing-edge debounce: drag streams collapse to one request per quiet
 * window (at most one fetch every `waitMs`).
 */
export function debounce<A extends unknown[]>(fn: (...args: A) => void, waitMs: number): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | null = null;
  return (...args: A) => {
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, waitMs);
  };
}
