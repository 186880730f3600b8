import { ApiClient } from "./api";
import { App, GeoProvider } from "./app";
import { ThreeSceneRenderer } from "./scene3d";
import type { GeoLocation } from "./types";
import "./style.css";

class BrowserGeo implements GeoProvider {
  getPosition(): Promise<GeoLocation> {
    return new Promise((resolve, reject) => {
      if (!navigator.geolocation) {
        reject(new Error("geolocation unsupported"));
        return;
      }
      navigator.geolocation.getCurrentPosition(
        (position) =>
          resolve({ lat: position.coords.latitude, lon: position.coords.longitude }),
        (error) => reject(error),
        { timeout: 10_000 },
      );
    });
  }
}

const root = document.getElementById("app");
if (!root) throw new Error("missing #app root");

// API base is build-time config; same-origin by default
const api = new ApiClient(import.meta.env.VITE_API_BASE ?? "");
const app = new App(
  root,
  api,
  (container) => new ThreeSceneRenderer(container),
  new BrowserGeo(),
);
void app.start();
