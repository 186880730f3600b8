import type {
  BreakpointsDoc,
  DatesResponse,
  LatestResponse,
  NearestResponse,
  PollutantInfo,
  RecordResponse,
  SceneSpec,
  Station,
  TrendResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly httpStatus: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** The slice of the API the app consumes; tests substitute a mock. */
export interface ApiLike {
  stations(): Promise<Station[]>;
  nearest(lat: number, lon: number): Promise<NearestResponse>;
  dates(stationId: string): Promise<DatesResponse>;
  record(stationId: string, date: string): Promise<RecordResponse>;
  latest(stationId: string): Promise<LatestResponse>;
  scene(stationId: string, date?: string, seed?: number): Promise<SceneSpec>;
  pollutants(): Promise<PollutantInfo[]>;
  breakpoints(): Promise<BreakpointsDoc>;
}

export class ApiClient implements ApiLike {
  constructor(private readonly baseUrl: string = "") {}

  private async get<T>(path: string, params?: Record<string, string | number>): Promise<T> {
    let url = this.baseUrl + path;
    if (params && Object.keys(params).length > 0) {
      const query = new URLSearchParams();
      for (const [key, value] of Object.entries(params)) {
        query.set(key, String(value));
      }
      url += `?${query.toString()}`;
    }
    const response = await fetch(url);
    if (!response.ok) {
      let code = "unknown";
      let message = response.statusText;
      try {
        const body = (await response.json()) as { code?: string; message?: string };
        if (body.code) code = body.code;
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  stations(): Promise<Station[]> {
    return this.get("/stations");
  }

  nearest(lat: number, lon: number): Promise<NearestResponse> {
    return this.get("/stations/nearest", { lat, lon });
  }

  dates(stationId: string): Promise<DatesResponse> {
    return this.get(`/stations/${encodeURIComponent(stationId)}/dates`);
  }

  record(stationId: string, date: string): Promise<RecordResponse> {
    return this.get(`/stations/${encodeURIComponent(stationId)}/records`, { date });
  }

  latest(stationId: string): Promise<LatestResponse> {
    return this.get(`/stations/${encodeURIComponent(stationId)}/latest`);
  }

  scene(stationId: string, date?: string, seed?: number): Promise<SceneSpec> {
    const params: Record<string, string | number> = {};
    if (date !== undefined) params.date = date;
    if (seed !== undefined) params.seed = seed;
    return this.get(`/stations/${encodeURIComponent(stationId)}/scene`, params);
  }

  pollutants(): Promise<PollutantInfo[]> {
    return this.get("/pollutants");
  }

  breakpoints(): Promise<BreakpointsDoc> {
    return this.get("/breakpoints");
  }

  trend(stationId: string, from: string, to: string, metric = "aqi"): Promise<TrendResponse> {
    return this.get(`/stations/${encodeURIComponent(stationId)}/trend`, { from, to, metric });
  }
}
