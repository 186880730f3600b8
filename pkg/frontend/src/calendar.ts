/**
 * Month calendar driven by a station's availability dates. Dates without
 * data render as disabled buttons, so selecting them is impossible; month
 * navigation is clamped to the span of served data.
 */
export class CalendarPanel {
  readonly element: HTMLElement;
  private available = new Set<string>();
  private months: string[] = []; // "YYYY-MM", ascending
  private monthIndex = 0;
  private selected: string | null = null;

  constructor(private readonly onSelect: (date: string) => void) {
    this.element = document.createElement("div");
    this.element.className = "calendar";
    this.element.dataset.role = "calendar";
  }

  setAvailable(dates: string[]): void {
    this.available = new Set(dates);
    const months = [...new Set(dates.map((d) => d.slice(0, 7)))].sort();
    this.months = months;
    this.monthIndex = Math.max(0, months.length - 1); // open on the newest month
    this.render();
  }

  setSelected(date: string | null): void {
    this.selected = date;
    if (date) {
      const month = date.slice(0, 7);
      const index = this.months.indexOf(month);
      if (index >= 0) this.monthIndex = index;
    }
    this.render();
  }

  private render(): void {
    this.element.replaceChildren();
    if (this.months.length === 0) {
      const empty = document.createElement("p");
      empty.textContent = "No dates served for this station.";
      this.element.append(empty);
      return;
    }
    const month = this.months[this.monthIndex];
    const [year, monthNumber] = month.split("-").map(Number);

    const header = document.createElement("div");
    header.className = "calendar-header";
    const prev = document.createElement("button");
    prev.textContent = "‹";
    prev.dataset.role = "calendar-prev";
    prev.disabled = this.monthIndex === 0;
    prev.addEventListener("click", () => {
      this.monthIndex -= 1;
      this.render();
    });
    const next = document.createElement("button");
    next.textContent = "›";
    next.dataset.role = "calendar-next";
    next.disabled = this.monthIndex === this.months.length - 1;
    next.addEventListener("click", () => {
      this.monthIndex += 1;
      this.render();
    });
    const label = document.createElement("span");
    label.textContent = new Date(Date.UTC(year, monthNumber - 1, 1)).toLocaleDateString(
      undefined,
      { month: "long", year: "numeric", timeZone: "UTC" },
    );
    label.dataset.role = "calendar-month";
    header.append(prev, label, next);

    const grid = document.createElement("div");
    grid.className = "calendar-grid";
    const daysInMonth = new Date(Date.UTC(year, monthNumber, 0)).getUTCDate();
    for (let day = 1; day <= daysInMonth; day++) {
      const iso = `${month}-${String(day).padStart(2, "0")}`;
      const button = document.createElement("button");
      button.textContent = String(day);
      button.dataset.date = iso;
      const hasData = this.available.has(iso);
      button.disabled = !hasData;
      button.className = hasData ? "calendar-day" : "calendar-day unavailable";
      if (iso === this.selected) button.classList.add("selected");
      if (hasData) {
        button.addEventListener("click", () => {
          if (!this.available.has(iso)) return;
          this.onSelect(iso);
        });
      }
      grid.append(button);
    }
    this.element.append(header, grid);
  }
}
