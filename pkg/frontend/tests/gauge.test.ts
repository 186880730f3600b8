// Secondary criterion: AQI values across all six bands render six distinct
// category colours, bound straight from the mocked API's reports.

import { beforeEach, describe, expect, it } from "vitest";

import { App } from "../src/app";
import { RadialGauge } from "../src/gauge";
import {
  FixedGeo,
  MockApi,
  StubRenderer,
  categoryFor,
  flush,
  makeReport,
  makeStation,
} from "./helpers";

const CRITERION_AQIS = [25, 75, 150, 250, 350, 450];

describe("gauge/category binding", () => {
  beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
  });

  async function gaugeColorFor(aqi: number): Promise<string> {
    const api = new MockApi({
      stations: [makeStation("S1")],
      nearestId: "S1",
      distanceKm: 1.2,
      datesByStation: { S1: ["2020-03-01"] },
      reportForStation: () => makeReport(aqi),
    });
    const root = document.getElementById("app")!;
    const app = new App(root, api, () => new StubRenderer(), new FixedGeo({ lat: 28.6, lon: 77.2 }));
    await app.start();
    await flush();
    const arc = root.querySelector('[data-role="gauge-arc"]')!;
    return arc.getAttribute("stroke")!;
  }

  it("renders the six distinct category colors for the six bands", async () => {
    const colors: string[] = [];
    for (const aqi of CRITERION_AQIS) {
      colors.push(await gaugeColorFor(aqi));
    }
    expect(new Set(colors).size).toBe(6);
    expect(colors).toEqual(CRITERION_AQIS.map((aqi) => categoryFor(aqi).color));
  });

  it("also shows the value and category text from the payload", async () => {
    await gaugeColorFor(350);
    expect(document.querySelector('[data-role="gauge-value"]')!.textContent).toBe("350");
    expect(document.querySelector('[data-role="gauge-category"]')!.textContent).toContain(
      "Very Poor",
    );
  });

  it("still renders the gauge when the scene has zero spawns", async () => {
    const api = new MockApi({
      stations: [makeStation("S1")],
      nearestId: "S1",
      distanceKm: 1.2,
      datesByStation: { S1: ["2020-03-01"] },
      reportForStation: () => makeReport(25),
    });
    const baseScene = api.scene.bind(api);
    api.scene = async (stationId, date) => ({ ...(await baseScene(stationId, date)), spawns: [] });
    const root = document.getElementById("app")!;
    const renderer = new StubRenderer();
    const app = new App(root, api, () => renderer, new FixedGeo({ lat: 28.6, lon: 77.2 }));
    await app.start();
    await flush();
    expect(renderer.lastScene?.spawns).toEqual([]);
    expect(root.querySelector('[data-role="gauge-value"]')!.textContent).toBe("25");
  });
});

describe("RadialGauge unit behaviour", () => {
  it("binds arc colour to the report colorCode", () => {
    const gauge = new RadialGauge();
    gauge.update(makeReport(75));
    expect(gauge.color).toBe(categoryFor(75).color);
  });

  it("clears to a neutral state without a report", () => {
    const gauge = new RadialGauge();
    gauge.update(makeReport(250));
    gauge.update(null);
    expect(gauge.color).toBe("#2a2f36");
    expect(gauge.element.querySelector('[data-role="gauge-value"]')!.textContent).toBe("--");
  });

  it("marks partial-data reports", () => {
    const gauge = new RadialGauge();
    const report = makeReport(40);
    report.valid = false;
    report.reason = "fewer than 3 sub-indices";
    gauge.update(report);
    expect(gauge.element.querySelector('[data-role="gauge-category"]')!.textContent).toContain(
      "partial data",
    );
  });
});
