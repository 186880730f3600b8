import type { ApiLike } from "./api";
import { CalendarPanel } from "./calendar";
import { DetailPanel } from "./detail";
import { RadialGauge } from "./gauge";
import { InfoModal } from "./infoModal";
import type { SceneRenderer } from "./scene3d";
import { LatestWins, ViewState, initialState, overrideActive } from "./state";
import type { BreakpointsDoc, GeoLocation, PollutantInfo, Station } from "./types";

export interface GeoProvider {
  getPosition(): Promise<GeoLocation>;
}

/**
 * The human steering loop: live view on the nearest station, historical
 * browsing with calendar and location override, detail panel, and the
 * pollutant info modal. The app never computes AQI numbers; it binds what
 * the API returns.
 */
export class App {
  readonly state: ViewState = initialState();
  private readonly gauge = new RadialGauge();
  private readonly modal = new InfoModal();
  private readonly detail: DetailPanel;
  private readonly calendar: CalendarPanel;
  private readonly requests = new LatestWins();
  private stations: Station[] = [];
  private registry = new Map<string, PollutantInfo>();
  private breakpoints: BreakpointsDoc | null = null;
  private colors: Record<string, string> = {};

  private readonly renderer: SceneRenderer;
  private stationLabel!: HTMLElement;
  private distanceLabel!: HTMLElement;
  private overrideIndicator!: HTMLElement;
  private modeToggle!: HTMLButtonElement;
  private historicalControls!: HTMLElement;
  private stationSelect!: HTMLSelectElement;
  private manualForm!: HTMLFormElement;
  private status!: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiLike,
    rendererFactory: (container: HTMLElement) => SceneRenderer,
    private readonly geo: GeoProvider,
  ) {
    this.detail = new DetailPanel((code) => this.openInfo(code));
    this.calendar = new CalendarPanel((date) => void this.selectDate(date));
    const sceneContainer = this.buildLayout();
    this.renderer = rendererFactory(sceneContainer);
    this.renderer.onParticleClick((code) => this.openInfo(code));
    this.renderer.onBoundaryExit(() => void this.refreshScene());
  }

  private buildLayout(): HTMLElement {
    this.root.replaceChildren();
    const header = document.createElement("header");
    header.className = "topbar";

    const title = document.createElement("h1");
    title.textContent = "airviz";

    this.stationLabel = document.createElement("div");
    this.stationLabel.dataset.role = "station-label";
    this.distanceLabel = document.createElement("div");
    this.distanceLabel.dataset.role = "distance";

    this.overrideIndicator = document.createElement("div");
    this.overrideIndicator.dataset.role = "override-indicator";
    this.overrideIndicator.className = "override-indicator hidden";
    this.overrideIndicator.textContent = "⚠ location simulated";

    this.modeToggle = document.createElement("button");
    this.modeToggle.dataset.role = "mode-toggle";
    this.modeToggle.textContent = "⏳ historical";
    this.modeToggle.addEventListener("click", () => void this.toggleMode());

    header.append(title, this.stationLabel, this.distanceLabel,
                  this.overrideIndicator, this.modeToggle);

    const main = document.createElement("main");
    const sceneContainer = document.createElement("div");
    sceneContainer.className = "scene-container";
    sceneContainer.dataset.role = "scene-container";

    const aside = document.createElement("aside");
    this.historicalControls = document.createElement("div");
    this.historicalControls.dataset.role = "historical-controls";
    this.historicalControls.className = "historical-controls hidden";
    this.stationSelect = document.createElement("select");
    this.stationSelect.dataset.role = "station-select";
    this.stationSelect.addEventListener("change", () => {
      void this.selectStation(this.stationSelect.value);
    });
    this.historicalControls.append(this.stationSelect, this.calendar.element);

    this.manualForm = document.createElement("form");
    this.manualForm.dataset.role = "manual-location";
    this.manualForm.className = "manual-location hidden";
    const latInput = document.createElement("input");
    latInput.name = "lat";
    latInput.placeholder = "latitude";
    const lonInput = document.createElement("input");
    lonInput.name = "lon";
    lonInput.placeholder = "longitude";
    const go = document.createElement("button");
    go.type = "submit";
    go.textContent = "use coordinates";
    this.manualForm.append(latInput, lonInput, go);
    this.manualForm.addEventListener("submit", (event) => {
      event.preventDefault();
      const lat = Number(latInput.value);
      const lon = Number(lonInput.value);
      if (Number.isFinite(lat) && Number.isFinite(lon)) {
        void this.loadLive({ lat, lon });
      }
    });

    this.status = document.createElement("div");
    this.status.dataset.role = "status";
    this.status.className = "status";

    aside.append(this.gauge.element, this.detail.element, this.historicalControls,
                 this.manualForm, this.status);
    main.append(sceneContainer, aside);
    this.root.append(header, main, this.modal.element);
    return sceneContainer;
  }

  async start(): Promise<void> {
    const [registry, breakpoints, stations] = await Promise.all([
      this.api.pollutants(),
      this.api.breakpoints(),
      this.api.stations(),
    ]);
    this.registry = new Map(registry.map((entry) => [entry.code, entry]));
    this.colors = Object.fromEntries(registry.map((entry) => [entry.code, entry.colorCode]));
    this.breakpoints = breakpoints;
    this.stations = stations;
    this.detail.configure(breakpoints, registry);
    this.stationSelect.replaceChildren(
      ...stations.map((station) => {
        const option = document.createElement("option");
        option.value = station.id;
        option.textContent = `${station.name} (${station.city})`;
        return option;
      }),
    );
    await this.loadLive();
  }

  /** Live flow: locate, find the nearest station, show its newest data. */
  async loadLive(coords?: GeoLocation): Promise<void> {
    this.state.mode = "live";
    this.syncModeUi();
    let here = coords;
    if (!here) {
      try {
        here = await this.geo.getPosition();
      } catch {
        this.manualForm.classList.remove("hidden");
        this.setStatus("Location unavailable; enter coordinates.");
        return;
      }
    }
    this.manualForm.classList.add("hidden");
    const token = this.requests.begin();
    try {
      const nearest = await this.api.nearest(here.lat, here.lon);
      if (!this.requests.isCurrent(token)) return;
      this.state.nearestStationId = nearest.station.id;
      this.state.selectedStationId = nearest.station.id;
      this.stationLabel.textContent =
        `${nearest.station.name} · ${nearest.station.city}`;
      this.distanceLabel.textContent = `${nearest.distanceKm.toFixed(1)} km to live tower`;
      this.stationSelect.value = nearest.station.id;
      await this.showStation(nearest.station.id, null, token);
    } catch (error) {
      this.setStatus(describe(error));
    }
    this.syncOverride();
  }

  async toggleMode(): Promise<void> {
    if (this.state.mode === "live") {
      this.state.mode = "historical";
      this.syncModeUi();
      const station = this.state.selectedStationId ?? this.stations[0]?.id;
      if (station) await this.selectStation(station);
    } else {
      // star icon: straight back to the live view on the nearest station
      await this.loadLive();
    }
  }

  /** Historical: pick a station, load its calendar, show its newest date. */
  async selectStation(stationId: string): Promise<void> {
    this.state.selectedStationId = stationId;
    this.stationSelect.value = stationId;
    this.syncOverride();
    const token = this.requests.begin();
    try {
      const dates = await this.api.dates(stationId);
      if (!this.requests.isCurrent(token)) return;
      this.calendar.setAvailable(dates.dates);
      const newest = dates.dates[dates.dates.length - 1] ?? null;
      this.calendar.setSelected(newest);
      this.state.selectedDate = newest;
      if (newest) {
        await this.showStation(stationId, newest, token);
      } else {
        this.gauge.update(null);
        this.detail.update(null, null);
        this.setStatus("No data served for this station.");
      }
    } catch (error) {
      this.setStatus(describe(error));
    }
  }

  async selectDate(date: string): Promise<void> {
    const station = this.state.selectedStationId;
    if (!station) return;
    this.state.selectedDate = date;
    this.calendar.setSelected(date);
    const token = this.requests.begin();
    try {
      await this.showStation(station, date, token);
    } catch (error) {
      this.setStatus(describe(error));
    }
  }

  /** One fetch+render pass; exactly one scene render per invocation. */
  private async showStation(
    stationId: string,
    date: string | null,
    token: number,
  ): Promise<void> {
    const [payload, scene] = await Promise.all([
      date === null ? this.api.latest(stationId) : this.api.record(stationId, date),
      this.api.scene(stationId, date ?? undefined, this.state.seed ?? undefined),
    ]);
    if (!this.requests.isCurrent(token)) return;
    this.gauge.update(payload.aqiReport);
    this.detail.update(payload.record, payload.aqiReport);
    this.renderer.render(scene, this.colors);
    this.setStatus("");
  }

  /** Re-request the current scene (camera crossed the airspace boundary). */
  async refreshScene(): Promise<void> {
    const station = this.state.selectedStationId;
    if (!station) return;
    const token = this.requests.begin();
    const scene = await this.api.scene(
      station,
      this.state.selectedDate ?? undefined,
      this.state.seed ?? undefined,
    );
    if (!this.requests.isCurrent(token)) return;
    this.renderer.render(scene, this.colors);
  }

  openInfo(code: string): void {
    const entry = this.registry.get(code);
    if (entry) this.modal.open(entry);
  }

  get overrideVisible(): boolean {
    return !this.overrideIndicator.classList.contains("hidden");
  }

  private syncOverride(): void {
    this.overrideIndicator.classList.toggle("hidden", !overrideActive(this.state));
  }

  private syncModeUi(): void {
    const historical = this.state.mode === "historical";
    this.historicalControls.classList.toggle("hidden", !historical);
    this.modeToggle.textContent = historical ? "⭐ live" : "⏳ historical";
    if (!historical) this.syncOverride();
  }

  private setStatus(message: string): void {
    this.status.textContent = message;
  }
}

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
