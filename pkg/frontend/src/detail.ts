import type { AqiReport, BreakpointsDoc, DailyRecord, PollutantInfo } from "./types";

/**
 * Detailed breakdown: every sampled pollutant with its concentration, a
 * colour-coded sub-index bar, and the primary breakpoints underneath.
 * All numbers (concentrations, sub-indices, breakpoints, colours) come
 * from API payloads; the panel does no AQI arithmetic.
 */
export class DetailPanel {
  readonly element: HTMLElement;
  private breakpoints: BreakpointsDoc | null = null;
  private info = new Map<string, PollutantInfo>();

  constructor(private readonly onPollutantClick: (code: string) => void) {
    this.element = document.createElement("div");
    this.element.className = "detail-panel";
    this.element.dataset.role = "detail-panel";
  }

  configure(breakpoints: BreakpointsDoc, registry: PollutantInfo[]): void {
    this.breakpoints = breakpoints;
    this.info = new Map(registry.map((entry) => [entry.code, entry]));
  }

  private categoryColor(label: string): string {
    const band = this.breakpoints?.categories.find((b) => b.label === label);
    return band ? band.color : "#888888";
  }

  update(record: DailyRecord | null, report: AqiReport | null): void {
    this.element.replaceChildren();
    if (!record) return;
    const subByCode = new Map((report?.subIndices ?? []).map((si) => [si.pollutant, si]));

    for (const [code, sample] of Object.entries(record.samples)) {
      const row = document.createElement("div");
      row.className = "pollutant-row";
      row.dataset.pollutant = code;

      const name = document.createElement("button");
      name.className = "pollutant-name";
      name.dataset.role = "pollutant-open-info";
      const entry = this.info.get(code);
      name.textContent = entry ? entry.displayName : code;
      if (entry) name.style.setProperty("--pollutant-color", entry.colorCode);
      name.addEventListener("click", () => this.onPollutantClick(code));

      const concentration = document.createElement("span");
      concentration.className = "pollutant-concentration";
      concentration.textContent = `${sample.value} ${sample.unit}`;
      if (sample.provenance === "interpolated") {
        concentration.textContent += " (interpolated)";
      }

      row.append(name, concentration);

      const sub = subByCode.get(code);
      if (sub) {
        const bar = document.createElement("div");
        bar.className = "subindex-bar";
        const fill = document.createElement("div");
        fill.className = "subindex-fill";
        fill.style.width = `${Math.min(100, (sub.value / 500) * 100)}%`;
        fill.style.background = this.categoryColor(sub.category);
        fill.dataset.role = "subindex-fill";
        fill.title = `${sub.value} (${sub.category})`;
        bar.append(fill);
        const value = document.createElement("span");
        value.className = "subindex-value";
        value.textContent = `${sub.value} ${sub.category}`;
        row.append(bar, value);
      }

      const segments = this.breakpoints?.pollutants[code]?.segments;
      if (segments) {
        const knots = [segments[0][0], ...segments.map((s) => s[1])];
        const breakpointLine = document.createElement("div");
        breakpointLine.className = "pollutant-breakpoints";
        breakpointLine.dataset.role = "pollutant-breakpoints";
        breakpointLine.textContent =
          "breakpoints: " + knots.join(" / ") + ` ${this.breakpoints?.pollutants[code].unit}`;
        row.append(breakpointLine);
      }
      this.element.append(row);
    }

    if (record.temperatureC !== undefined) {
      const temperature = document.createElement("div");
      temperature.className = "temperature";
      temperature.dataset.role = "temperature";
      temperature.textContent = `Temperature: ${record.temperatureC} °C`;
      this.element.append(temperature);
    }
  }
}
