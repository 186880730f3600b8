export type Mode = "live" | "historical";

export interface ViewState {
  mode: Mode;
  nearestStationId: string | null;
  selectedStationId: string | null;
  selectedDate: string | null;
  seed: number | null;
}

export function initialState(): ViewState {
  return {
    mode: "live",
    nearestStationId: null,
    selectedStationId: null,
    selectedDate: null,
    seed: null,
  };
}

/**
 * Derived, never stored: the override indicator shows exactly when the
 * station on screen is not the user's nearest one.
 */
export function overrideActive(state: ViewState): boolean {
  return (
    state.selectedStationId !== null &&
    state.nearestStationId !== null &&
    state.selectedStationId !== state.nearestStationId
  );
}

/** Serializes async responses: only the most recent request may apply. */
export class LatestWins {
  private current = 0;

  begin(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(token: number): boolean {
    return token === this.current;
  }
}
