// Shared test doubles: a canned in-memory API and a counting renderer stub.

import type { ApiLike } from "../src/api";
import type { GeoProvider } from "../src/app";
import type { SceneRenderer } from "../src/scene3d";
import type {
  AqiReport,
  BreakpointsDoc,
  DailyRecord,
  DatesResponse,
  GeoLocation,
  LatestResponse,
  NearestResponse,
  PollutantInfo,
  RecordResponse,
  SceneSpec,
  Station,
} from "../src/types";

export const CATEGORIES = [
  { label: "Good", indexLo: 0, indexHi: 50, color: "#00b050" },
  { label: "Satisfactory", indexLo: 51, indexHi: 100, color: "#92d050" },
  { label: "Moderate", indexLo: 101, indexHi: 200, color: "#ffff00" },
  { label: "Poor", indexLo: 201, indexHi: 300, color: "#ff9900" },
  { label: "Very Poor", indexLo: 301, indexHi: 400, color: "#ff0000" },
  { label: "Severe", indexLo: 401, indexHi: 500, color: "#c00000" },
];

export function categoryFor(aqi: number) {
  const band = CATEGORIES.find((b) => aqi >= b.indexLo && aqi <= b.indexHi);
  if (!band) throw new Error(`no band for ${aqi}`);
  return band;
}

export function makeStation(id: string, lat = 28.6, lon = 77.2): Station {
  return {
    id,
    name: `Station ${id}`,
    city: "Delhi",
    state: "Delhi",
    location: { lat, lon },
    live: true,
  };
}

export function makeReport(overall: number): AqiReport {
  const band = categoryFor(overall);
  return {
    overall,
    category: band.label,
    colorCode: band.color,
    dominant: "PM2.5",
    valid: true,
    reason: null,
    subIndices: [
      { pollutant: "PM2.5", value: overall, category: band.label },
      { pollutant: "PM10", value: Math.max(0, overall - 10), category: band.label },
      { pollutant: "NO2", value: Math.max(0, overall - 20), category: band.label },
    ],
  };
}

export function makeRecord(stationId: string, date: string): DailyRecord {
  return {
    stationId,
    date,
    samples: {
      "PM2.5": { value: 45.0, unit: "ug/m3", provenance: "measured" },
      "PM10": { value: 80.0, unit: "ug/m3", provenance: "measured" },
      "NO2": { value: 30.0, unit: "ug/m3", provenance: "interpolated" },
    },
    temperatureC: 24.5,
  };
}

export function makeScene(stationId: string, date: string): SceneSpec {
  return {
    stationId,
    date,
    seed: 42,
    airspace: { halfExtents: [5, 2.5, 5], renderRange: 3 },
    aqi: makeReport(75),
    spawns: [
      {
        pollutant: "PM2.5",
        position: [0.5, 0.1, -1],
        velocity: [0.05, 0.01, 0.02],
        rotationAxis: [0, 1, 0],
        angularSpeed: 0.4,
        scale: 0.8,
      },
    ],
  };
}

const REGISTRY_CODES = [
  "PM10", "PM2.5", "NO", "NO2", "NOx", "CO", "SO2", "O3", "NH3", "C6H6", "C7H8", "C8H10",
];

export function makeRegistry(): PollutantInfo[] {
  return REGISTRY_CODES.map((code, i) => ({
    code,
    displayName: `${code} display name`,
    molecularStructure: `${code} structure`,
    description: `${code} description`,
    healthEffects: [`${code} effect`],
    controllableSources: [`${code} source`],
    colorCode: `#${String(100000 + i * 7)}`,
  }));
}

export function makeBreakpoints(): BreakpointsDoc {
  return {
    format: "airviz-breakpoints-v1",
    pollutants: {
      "PM2.5": { unit: "ug/m3", segments: [[0, 30, 0, 50], [30, 60, 50, 100]] },
      "PM10": { unit: "ug/m3", segments: [[0, 50, 0, 50], [50, 100, 50, 100]] },
      "NO2": { unit: "ug/m3", segments: [[0, 40, 0, 50], [40, 80, 50, 100]] },
    },
    categories: CATEGORIES,
  };
}

export interface MockData {
  stations: Station[];
  nearestId: string;
  distanceKm: number;
  datesByStation: Record<string, string[]>;
  reportForStation?: (stationId: string, date: string | null) => AqiReport | null;
}

/** Canned API; every call is also counted for assertions. */
export class MockApi implements ApiLike {
  calls: Record<string, number> = {};

  constructor(readonly data: MockData) {}

  private count(name: string): void {
    this.calls[name] = (this.calls[name] ?? 0) + 1;
  }

  async stations(): Promise<Station[]> {
    this.count("stations");
    return this.data.stations;
  }

  async nearest(_lat: number, _lon: number): Promise<NearestResponse> {
    this.count("nearest");
    const station = this.data.stations.find((s) => s.id === this.data.nearestId);
    if (!station) throw new Error("mock: nearest station missing");
    return { station, distanceKm: this.data.distanceKm };
  }

  async dates(stationId: string): Promise<DatesResponse> {
    this.count("dates");
    return { stationId, dates: this.data.datesByStation[stationId] ?? [] };
  }

  private report(stationId: string, date: string | null): AqiReport | null {
    return this.data.reportForStation
      ? this.data.reportForStation(stationId, date)
      : makeReport(75);
  }

  async record(stationId: string, date: string): Promise<RecordResponse> {
    this.count("record");
    return { record: makeRecord(stationId, date), aqiReport: this.report(stationId, date) };
  }

  async latest(stationId: string): Promise<LatestResponse> {
    this.count("latest");
    const dates = this.data.datesByStation[stationId] ?? ["2020-03-01"];
    const newest = dates[dates.length - 1];
    return {
      record: makeRecord(stationId, newest),
      aqiReport: this.report(stationId, null),
      temperatureC: 24.5,
    };
  }

  async scene(stationId: string, date?: string): Promise<SceneSpec> {
    this.count("scene");
    if (date === undefined) {
      const dates = this.data.datesByStation[stationId] ?? ["2020-03-01"];
      date = dates[dates.length - 1];
    }
    return makeScene(stationId, date);
  }

  async pollutants(): Promise<PollutantInfo[]> {
    this.count("pollutants");
    return makeRegistry();
  }

  async breakpoints(): Promise<BreakpointsDoc> {
    this.count("breakpoints");
    return makeBreakpoints();
  }
}

export class StubRenderer implements SceneRenderer {
  renderCount = 0;
  lastScene: SceneSpec | null = null;
  private clickCallback: ((pollutant: string) => void) | null = null;
  private boundaryCallback: (() => void) | null = null;

  render(spec: SceneSpec): void {
    this.renderCount += 1;
    this.lastScene = spec;
  }

  onParticleClick(callback: (pollutant: string) => void): void {
    this.clickCallback = callback;
  }

  onBoundaryExit(callback: () => void): void {
    this.boundaryCallback = callback;
  }

  dispose(): void {}

  simulateClick(pollutant: string): void {
    this.clickCallback?.(pollutant);
  }

  simulateBoundaryExit(): void {
    this.boundaryCallback?.();
  }
}

export class FixedGeo implements GeoProvider {
  constructor(private readonly position: GeoLocation | null) {}

  getPosition(): Promise<GeoLocation> {
    return this.position
      ? Promise.resolve(this.position)
      : Promise.reject(new Error("denied"));
  }
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
