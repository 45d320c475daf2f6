import { SchemaVersionError, parseSnapshot, type Snapshot } from "./schema.js";
import { buildGridView, type GridView } from "./viewmodel.js";

/** Renders the agents-by-arms grid: rows are arms, columns are agents; every
 *  cell carries an S bar over an F bar.  Recommendations and the majority arm
 *  style red, crossover parents blue, eliminated agents pinked-out — the
 *  class names below, colored by the stylesheet. */
export function renderGrid(container: HTMLElement, view: GridView): void {
  container.textContent = "";

  const table = document.createElement("table");
  table.className = "population-grid";
  for (const row of view.rows) {
    const tr = document.createElement("tr");
    for (const cell of row) {
      const td = document.createElement("td");
      td.className = ["cell", ...cell.classes].join(" ");
      td.dataset.agent = String(cell.agent);
      td.dataset.arm = String(cell.arm);
      td.title = `S=${cell.sRaw.toFixed(2)} F=${cell.fRaw.toFixed(2)}`;
      for (const [kind, length] of [
        ["s", cell.sBar],
        ["f", cell.fBar],
      ] as const) {
        const bar = document.createElement("div");
        bar.className = `bar bar-${kind}`;
        bar.style.width = `${(length * 100).toFixed(1)}%`;
        td.appendChild(bar);
      }
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  container.appendChild(table);

  const fitnessRow = document.createElement("div");
  fitnessRow.className = "fitness-row";
  for (const fit of view.fitness) {
    const cell = document.createElement("span");
    cell.className = ["fitness-cell", ...fit.classes].join(" ");
    cell.dataset.agent = String(fit.agent);
    for (const [kind, length] of [
      ["s", fit.sBar],
      ["f", fit.fBar],
    ] as const) {
      const bar = document.createElement("div");
      bar.className = `bar bar-${kind}`;
      bar.style.width = `${(length * 100).toFixed(1)}%`;
      cell.appendChild(bar);
    }
    fitnessRow.appendChild(cell);
  }
  container.appendChild(fitnessRow);

  const board = document.createElement("div");
  board.className = "message-board";
  board.textContent = view.message;
  container.appendChild(board);
}

export function renderErrorBanner(container: HTMLElement, message: string): void {
  container.textContent = "";
  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.textContent = message;
  container.appendChild(banner);
}

/** Validate and render a raw wire snapshot; a schema-version mismatch shows
 *  the error banner and renders nothing else. */
export function renderSnapshot(container: HTMLElement, raw: unknown): Snapshot | null {
  let snapshot: Snapshot;
  try {
    snapshot = parseSnapshot(raw);
  } catch (err) {
    if (err instanceof SchemaVersionError) {
      renderErrorBanner(container, err.message);
      return null;
    }
    throw err;
  }
  renderGrid(container, buildGridView(snapshot));
  return snapshot;
}
