import type { Snapshot } from "../src/schema.js";

export function makeSnapshot(overrides: Partial<Snapshot> = {}): Snapshot {
  const m = overrides.population_size ?? 5;
  const k = overrides.arm_count ?? 3;
  const grid2d = () => Array.from({ length: m }, () => Array.from({ length: k }, () => 1));
  const gridBars = () =>
    Array.from({ length: m }, () => Array.from({ length: k }, () => 0.5));
  return {
    schema_version: 1,
    step: 0,
    phase: "idle",
    population_size: m,
    arm_count: k,
    grid: { s: grid2d(), f: grid2d(), s_display: gridBars(), f_display: gridBars() },
    fitness: {
      s: Array(m).fill(1),
      f: Array(m).fill(1),
      s_display: Array(m).fill(1),
      f_display: Array(m).fill(1),
    },
    average_reward: 0,
    message: "learning step 0, average reward 0.000, stage idle",
    ...overrides,
  };
}
