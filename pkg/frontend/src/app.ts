import { SessionClient } from "./client.js";
import { PlaybackController } from "./controls.js";
import { renderGrid } from "./render.js";
import { buildGridView } from "./viewmodel.js";
import { sessionConfigSchema, type Snapshot } from "./schema.js";

/** Wire the config form, playback controls, and grid into a host element.
 *  Kept framework-free; everything testable lives in the other modules. */
export function mountApp(root: HTMLElement, serviceUrl = "http://localhost:8000"): void {
  root.innerHTML = `
    <form class="config-form">
      <label>population <input name="population_size" type="number" value="5" min="1" max="20"></label>
      <label>arms <input name="arm_count" type="number" value="3" min="1" max="10"></label>
      <label>mutations <input name="mutation_count" type="number" value="1" min="0"></label>
      <label>period <input name="period" type="number" placeholder="stationary"></label>
      <label>seed <input name="seed" type="number" value="0"></label>
      <label>speed ms <input name="speed" type="number" value="500" min="50"></label>
      <button type="submit">apply</button>
    </form>
    <div class="controls">
      <button data-action="start">start</button>
      <button data-action="pause">pause</button>
      <button data-action="step">step</button>
      <button data-action="reset">reset</button>
    </div>
    <div class="grid-host"></div>
  `;
  const gridHost = root.querySelector(".grid-host") as HTMLElement;
  const form = root.querySelector(".config-form") as HTMLFormElement;

  const controller = new PlaybackController(new SessionClient(serviceUrl), {
    onSnapshot: (snapshot: Snapshot) => renderGrid(gridHost, buildGridView(snapshot)),
    onError: (err) => {
      const board = gridHost.querySelector(".message-board");
      if (board) board.textContent = String(err);
    },
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const period = data.get("period");
    controller.speedMs = Number(data.get("speed") ?? 500);
    const config = sessionConfigSchema.parse({
      population_size: Number(data.get("population_size")),
      arm_count: Number(data.get("arm_count")),
      mutation_count: Number(data.get("mutation_count")),
      environment: { kind: "mab", period: period ? Number(period) : null },
      seed: Number(data.get("seed")),
    });
    void controller.reconfigure(config);
  });

  root.querySelector(".controls")?.addEventListener("click", (event) => {
    const action = (event.target as HTMLElement).dataset?.action;
    if (action === "start") controller.start();
    else if (action === "pause") controller.pause();
    else if (action === "step") void controller.step();
    else if (action === "reset") void controller.reset();
  });
}
