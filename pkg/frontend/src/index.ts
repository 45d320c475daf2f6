export {
  PHASES,
  SCHEMA_VERSION,
  SchemaVersionError,
  parseSnapshot,
  sessionConfigSchema,
  snapshotSchema,
} from "./schema.js";
export type { Phase, SessionConfig, Snapshot } from "./schema.js";
export { ServiceError, SessionClient } from "./client.js";
export type { CreateResult, Granularity } from "./client.js";
export { buildGridView } from "./viewmodel.js";
export type { CellView, FitnessView, GridView } from "./viewmodel.js";
export { renderErrorBanner, renderGrid, renderSnapshot } from "./render.js";
export { PlaybackController } from "./controls.js";
export type { ControllerOptions, PlayState } from "./controls.js";
