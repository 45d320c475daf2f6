import { z } from "zod";

export const SCHEMA_VERSION = 1;

export const PHASES = [
  "idle",
  "recommend",
  "vote",
  "reward",
  "update",
  "select",
  "crossover",
  "mutate",
] as const;

export type Phase = (typeof PHASES)[number];

const gridSchema = z.object({
  s: z.array(z.array(z.number())),
  f: z.array(z.array(z.number())),
  s_display: z.array(z.array(z.number().min(0).max(1))),
  f_display: z.array(z.array(z.number().min(0).max(1))),
});

const fitnessSchema = z.object({
  s: z.array(z.number()),
  f: z.array(z.number()),
  s_display: z.array(z.number().min(0).max(1)),
  f_display: z.array(z.number().min(0).max(1)),
});

export const snapshotSchema = z.object({
  schema_version: z.literal(SCHEMA_VERSION),
  step: z.number().int().nonnegative(),
  phase: z.enum(PHASES),
  population_size: z.number().int().positive(),
  arm_count: z.number().int().positive(),
  grid: gridSchema,
  fitness: fitnessSchema,
  average_reward: z.number(),
  message: z.string(),
  recommendations: z.array(z.number().int()).optional(),
  majority_action: z.number().int().optional(),
  reward: z.number().optional(),
  aligned_ids: z.array(z.number().int()).optional(),
  fitness_samples: z.array(z.number()).optional(),
  elite_ids: z.array(z.number().int()).optional(),
  eliminated_ids: z.array(z.number().int()).optional(),
  parent_pairs: z.array(z.tuple([z.number().int(), z.number().int()])).optional(),
  mutations: z.array(z.array(z.number())).optional(),
});

export type Snapshot = z.infer<typeof snapshotSchema>;

export const sessionConfigSchema = z.object({
  population_size: z.number().int().min(1).max(20).default(5),
  arm_count: z.number().int().min(1).max(10).default(3),
  mutation_count: z.number().int().min(0).default(1),
  selection_ratio: z.number().gt(0).max(1).default(0.5),
  init_upper: z.number().min(1).default(1.0),
  environment: z
    .object({
      kind: z.literal("mab").default("mab"),
      period: z.number().int().min(1).nullable().default(null),
      prob_alpha: z.number().gt(0).default(1.0),
      prob_beta: z.number().gt(0).default(1.0),
    })
    .default({ kind: "mab", period: null, prob_alpha: 1.0, prob_beta: 1.0 }),
  seed: z.number().int().default(0),
});

export type SessionConfig = z.input<typeof sessionConfigSchema>;

export class SchemaVersionError extends Error {
  constructor(public readonly got: unknown) {
    super(`snapshot schema version mismatch: expected ${SCHEMA_VERSION}, got ${got}`);
    this.name = "SchemaVersionError";
  }
}

/** Validate a wire snapshot; version mismatches raise their own error type
 *  so the UI can show a banner instead of a generic parse failure. */
export function parseSnapshot(raw: unknown): Snapshot {
  const version = (raw as { schema_version?: unknown })?.schema_version;
  if (version !== SCHEMA_VERSION) {
    throw new SchemaVersionError(version);
  }
  return snapshotSchema.parse(raw);
}
