import type { PollutantInfo } from "./types";

/** Tap-to-learn modal: what the pollutant is, its effects, and the
 * sources a person can actually do something about. */
export class InfoModal {
  readonly element: HTMLElement;

  constructor() {
    this.element = document.createElement("div");
    this.element.className = "info-modal hidden";
    this.element.dataset.role = "info-modal";
  }

  open(entry: PollutantInfo): void {
    this.element.replaceChildren();
    const card = document.createElement("div");
    card.className = "info-card";
    card.style.setProperty("--pollutant-color", entry.colorCode);

    const close = document.createElement("button");
    close.className = "info-close";
    close.dataset.role = "info-close";
    close.textContent = "×";
    close.addEventListener("click", () => this.close());

    const title = document.createElement("h2");
    title.textContent = entry.displayName;
    const structure = document.createElement("p");
    structure.className = "info-structure";
    structure.textContent = entry.molecularStructure;
    const description = document.createElement("p");
    description.textContent = entry.description;

    const effectsTitle = document.createElement("h3");
    effectsTitle.textContent = "Health effects";
    const effects = document.createElement("ul");
    effects.dataset.role = "info-effects";
    for (const effect of entry.healthEffects) {
      const li = document.createElement("li");
      li.textContent = effect;
      effects.append(li);
    }

    const sourcesTitle = document.createElement("h3");
    sourcesTitle.textContent = "Sources you can control";
    const sources = document.createElement("ul");
    sources.dataset.role = "info-sources";
    for (const source of entry.controllableSources) {
      const li = document.createElement("li");
      li.textContent = source;
      sources.append(li);
    }

    card.append(close, title, structure, description, effectsTitle, effects, sourcesTitle, sources);
    this.element.append(card);
    this.element.classList.remove("hidden");
  }

  close(): void {
    this.element.classList.add("hidden");
  }

  get isOpen(): boolean {
    return !this.element.classList.contains("hidden");
  }
}
