import { describe, expect, it } from "vitest";

import { buildGridView } from "../src/viewmodel.js";
import { makeSnapshot } from "./fixtures.js";

describe("buildGridView", () => {
  it("lays out arms as rows and agents as columns", () => {
    const view = buildGridView(makeSnapshot());
    expect(view.rows).toHaveLength(3);
    for (const row of view.rows) expect(row).toHaveLength(5);
    expect(view.rows.flat()).toHaveLength(15);
    expect(view.fitness).toHaveLength(5);
  });

  it("marks the majority arm row red during vote", () => {
    const view = buildGridView(
      makeSnapshot({ phase: "vote", recommendations: [2, 2, 1, 2, 0], majority_action: 2 }),
    );
    for (const cell of view.rows[2]) expect(cell.classes).toContain("majority");
    for (const cell of view.rows[0]) expect(cell.classes).not.toContain("majority");
  });

  it("marks each agent's recommended cell", () => {
    const recs = [2, 2, 1, 2, 0];
    const view = buildGridView(makeSnapshot({ phase: "recommend", recommendations: recs }));
    for (let agent = 0; agent < 5; agent++) {
      for (let arm = 0; arm < 3; arm++) {
        const cell = view.rows[arm][agent];
        expect(cell.classes.includes("recommended")).toBe(recs[agent] === arm);
      }
    }
  });

  it("pinks out eliminated columns during select", () => {
    const view = buildGridView(
      makeSnapshot({ phase: "select", elite_ids: [0, 1, 2], eliminated_ids: [3, 4] }),
    );
    for (const row of view.rows) {
      expect(row[3].classes).toContain("eliminated");
      expect(row[4].classes).toContain("eliminated");
      expect(row[0].classes).not.toContain("eliminated");
    }
    expect(view.fitness[4].classes).toContain("eliminated");
  });

  it("colors parent columns blue during crossover", () => {
    const view = buildGridView(
      makeSnapshot({
        phase: "crossover",
        parent_pairs: [
          [0, 2],
          [2, 2],
        ],
      }),
    );
    for (const row of view.rows) {
      expect(row[0].classes).toContain("parent");
      expect(row[2].classes).toContain("parent");
      expect(row[1].classes).not.toContain("parent");
    }
  });

  it("does not leak select styling into unrelated phases", () => {
    const view = buildGridView(
      makeSnapshot({ phase: "mutate", eliminated_ids: [3, 4], mutations: [[0, 1, 0.5, -0.5]] }),
    );
    for (const row of view.rows) {
      expect(row[3].classes).not.toContain("eliminated");
    }
  });

  it("copies bar lengths and raw values from the snapshot", () => {
    const snap = makeSnapshot();
    snap.grid.s_display[1][2] = 0.25;
    snap.grid.s[1][2] = 7;
    const view = buildGridView(snap);
    expect(view.rows[2][1].sBar).toBe(0.25);
    expect(view.rows[2][1].sRaw).toBe(7);
  });
});
