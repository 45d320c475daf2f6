import type { Snapshot } from "./schema.js";

/** One grid cell: the S/F bars of one agent's belief about one arm.
 *  Rows are arms, columns are agents. */
export interface CellView {
  agent: number;
  arm: number;
  sBar: number; // rescaled bar length in [0, 1]
  fBar: number;
  sRaw: number;
  fRaw: number;
  classes: string[]; // "recommended" | "majority" | "parent" | "eliminated"
}

export interface FitnessView {
  agent: number;
  sBar: number;
  fBar: number;
  classes: string[];
}

export interface GridView {
  rows: CellView[][]; // [arm][agent]
  fitness: FitnessView[];
  message: string;
  phase: string;
  step: number;
  averageReward: number;
}

function columnClasses(snapshot: Snapshot): Map<number, string[]> {
  const byAgent = new Map<number, string[]>();
  const add = (agent: number, cls: string) => {
    const list = byAgent.get(agent) ?? [];
    if (!list.includes(cls)) list.push(cls);
    byAgent.set(agent, list);
  };
  if (snapshot.phase === "select" && snapshot.eliminated_ids) {
    for (const agent of snapshot.eliminated_ids) add(agent, "eliminated");
  }
  // after crossover, elites occupy the first columns; parent pairs index them
  if (
    (snapshot.phase === "crossover" || snapshot.phase === "mutate") &&
    snapshot.parent_pairs
  ) {
    for (const [a, b] of snapshot.parent_pairs) {
      add(a, "parent");
      add(b, "parent");
    }
  }
  return byAgent;
}

export function buildGridView(snapshot: Snapshot): GridView {
  const { population_size: m, arm_count: k } = snapshot;
  const perColumn = columnClasses(snapshot);
  const rows: CellView[][] = [];
  for (let arm = 0; arm < k; arm++) {
    const row: CellView[] = [];
    for (let agent = 0; agent < m; agent++) {
      const classes = [...(perColumn.get(agent) ?? [])];
      if (snapshot.recommendations?.[agent] === arm) classes.push("recommended");
      if (snapshot.majority_action === arm) classes.push("majority");
      row.push({
        agent,
        arm,
        sBar: snapshot.grid.s_display[agent][arm],
        fBar: snapshot.grid.f_display[agent][arm],
        sRaw: snapshot.grid.s[agent][arm],
        fRaw: snapshot.grid.f[agent][arm],
        classes,
      });
    }
    rows.push(row);
  }
  const fitness: FitnessView[] = [];
  for (let agent = 0; agent < m; agent++) {
    fitness.push({
      agent,
      sBar: snapshot.fitness.s_display[agent],
      fBar: snapshot.fitness.f_display[agent],
      classes: [...(perColumn.get(agent) ?? [])],
    });
  }
  return {
    rows,
    fitness,
    message: snapshot.message,
    phase: snapshot.phase,
    step: snapshot.step,
    averageReward: snapshot.average_reward,
  };
}
