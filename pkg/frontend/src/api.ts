/** Typed client for the analysis service. All numbers shown anywhere in the
 * UI come from these response payloads; the front end never recomputes
 * weights or consistency values itself. */

export interface PcsPayload {
  names: string[];
  best: number[]; // 1-based
  worst: number[];
  bestToOther: number[];
  otherToWorst: number[];
  scale?: string;
}

export interface AnchorInfo {
  kind: "pair" | "deficit" | "surplus" | "none";
  i?: number; // 1-based criterion indices
  j?: number;
}

export interface LegacySection {
  epsilonStar: number;
  case: string;
  abwStar: number;
  intervals: [number, number][];
  bestWeights: number[];
  bestModifiedPcs: PcsPayload;
  eta: Record<string, number>;
  malformedIntervals: boolean;
  etaExceedsEpsilon: boolean;
}

export interface AnalysisReport {
  epsilonStar: number;
  abwStar: number;
  intervals: [number, number][];
  bestWeights: number[];
  bestModifiedPcs: PcsPayload;
  ci: number;
  cr: number;
  anchor: AnchorInfo;
  boundsRespected: boolean;
  warnings: string[];
  legacy?: LegacySection;
}

export interface ScaleLevel {
  term: string | null;
  value: number;
}

export interface ScaleInfo {
  id: string;
  maxValue: number;
  levels: ScaleLevel[];
}

export interface ApiError {
  error: string;
  type?: string;
}

export class AnalyzeRequestError extends Error {
  constructor(message: string, readonly status: number, readonly kind?: string) {
    super(message);
    this.name = "AnalyzeRequestError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (...args) => globalThis.fetch(...args),
  ) {}

  async analyze(pcs: PcsPayload, signal?: AbortSignal): Promise<AnalysisReport> {
    const response = await this.fetchImpl(`${this.baseUrl}/api/analyze`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(pcs),
      signal,
    });
    if (!response.ok) {
      const body = (await response.json().catch(() => ({ error: response.statusText }))) as ApiError;
      throw new AnalyzeRequestError(body.error ?? "analysis failed", response.status, body.type);
    }
    return (await response.json()) as AnalysisReport;
  }

  async scales(): Promise<ScaleInfo[]> {
    const response = await this.fetchImpl(`${this.baseUrl}/api/scales`);
    if (!response.ok) {
      throw new AnalyzeRequestError("could not load scales", response.status);
    }
    const body = (await response.json()) as { scales: ScaleInfo[] };
    return body.scales;
  }
}
