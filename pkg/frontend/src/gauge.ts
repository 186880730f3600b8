import type { AqiReport } from "./types";

const RADIUS = 54;
const CIRCUMFERENCE = 2 * Math.PI * RADIUS;
const SWEEP = 0.75; // gauge covers three quarters of the circle

/**
 * Radial AQI gauge. The arc colour always comes from the report's
 * colorCode, never from a local table: the server owns category colours.
 */
export class RadialGauge {
  readonly element: HTMLElement;
  private readonly arc: SVGCircleElement;
  private readonly valueText: HTMLElement;
  private readonly categoryText: HTMLElement;

  constructor() {
    this.element = document.createElement("div");
    this.element.className = "gauge";
    const ns = "http://www.w3.org/2000/svg";
    const svg = document.createElementNS(ns, "svg");
    svg.setAttribute("viewBox", "0 0 140 140");
    svg.setAttribute("class", "gauge-svg");

    const track = document.createElementNS(ns, "circle");
    const arc = document.createElementNS(ns, "circle");
    for (const circle of [track, arc]) {
      circle.setAttribute("cx", "70");
      circle.setAttribute("cy", "70");
      circle.setAttribute("r", String(RADIUS));
      circle.setAttribute("fill", "none");
      circle.setAttribute("stroke-width", "12");
      circle.setAttribute("stroke-linecap", "round");
      circle.setAttribute("transform", "rotate(135 70 70)");
    }
    track.setAttribute("stroke", "#2a2f36");
    track.setAttribute("stroke-dasharray", `${CIRCUMFERENCE * SWEEP} ${CIRCUMFERENCE}`);
    arc.setAttribute("stroke", "#2a2f36");
    arc.setAttribute("stroke-dasharray", `0 ${CIRCUMFERENCE}`);
    arc.setAttribute("data-role", "gauge-arc");
    svg.append(track, arc);

    this.valueText = document.createElement("div");
    this.valueText.className = "gauge-value";
    this.valueText.dataset.role = "gauge-value";
    this.categoryText = document.createElement("div");
    this.categoryText.className = "gauge-category";
    this.categoryText.dataset.role = "gauge-category";
    this.element.append(svg, this.valueText, this.categoryText);
    this.arc = arc;
  }

  update(report: AqiReport | null): void {
    if (report === null) {
      this.arc.setAttribute("stroke", "#2a2f36");
      this.arc.setAttribute("stroke-dasharray", `0 ${CIRCUMFERENCE}`);
      this.valueText.textContent = "--";
      this.categoryText.textContent = "no data";
      this.element.style.removeProperty("--gauge-color");
      return;
    }
    const fraction = Math.min(Math.max(report.overall / 500, 0), 1);
    this.arc.setAttribute("stroke", report.colorCode);
    this.arc.setAttribute(
      "stroke-dasharray",
      `${CIRCUMFERENCE * SWEEP * fraction} ${CIRCUMFERENCE}`,
    );
    this.valueText.textContent = String(report.overall);
    this.categoryText.textContent = report.category + (report.valid ? "" : " (partial data)");
    this.element.style.setProperty("--gauge-color", report.colorCode);
  }

  /** Current arc colour (used by tests and the header badge). */
  get color(): string {
    return this.arc.getAttribute("stroke") ?? "";
  }
}
