// Payload shapes for the airviz REST API (mirrors schemas/ in the repo root).

export interface GeoLocation {
  lat: number;
  lon: number;
}

export interface Station {
  id: string;
  name: string;
  city: string;
  state: string;
  location: GeoLocation;
  live: boolean;
}

export interface NearestResponse {
  station: Station;
  distanceKm: number;
}

export interface SampleValue {
  value: number;
  unit: string;
  provenance: "measured" | "interpolated";
}

export interface DailyRecord {
  stationId: string;
  date: string;
  samples: Record<string, SampleValue>;
  temperatureC?: number;
}

export interface SubIndex {
  pollutant: string;
  value: number;
  category: string;
}

export interface AqiReport {
  overall: number;
  category: string;
  colorCode: string;
  dominant: string;
  valid: boolean;
  reason: string | null;
  subIndices: SubIndex[];
}

export interface RecordResponse {
  record: DailyRecord;
  aqiReport: AqiReport | null;
}

export interface LatestResponse extends RecordResponse {
  temperatureC?: number;
}

export interface DatesResponse {
  stationId: string;
  dates: string[];
}

export type Vec3 = [number, number, number];

export interface Airspace {
  halfExtents: Vec3;
  renderRange: number;
}

export interface ParticleSpawn {
  pollutant: string;
  position: Vec3;
  velocity: Vec3;
  rotationAxis: Vec3;
  angularSpeed: number;
  scale: number;
}

export interface SceneSpec {
  stationId: string;
  date: string;
  seed: number;
  airspace: Airspace;
  aqi: AqiReport;
  spawns: ParticleSpawn[];
}

export interface PollutantInfo {
  code: string;
  displayName: string;
  molecularStructure: string;
  description: string;
  healthEffects: string[];
  controllableSources: string[];
  colorCode: string;
}

export interface BreakpointEntry {
  unit: string;
  segments: number[][];
}

export interface CategoryBand {
  label: string;
  indexLo: number;
  indexHi: number;
  color: string;
}

export interface BreakpointsDoc {
  format: string;
  pollutants: Record<string, BreakpointEntry>;
  categories: CategoryBand[];
}

export interface TrendPoint {
  date: string;
  overallAqi: number;
  value: number | null;
  subIndices: Record<string, number>;
}

export interface TrendResponse {
  stationId: string;
  metric: string;
  from: string;
  to: string;
  points: TrendPoint[];
}
