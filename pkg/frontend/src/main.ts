// Browser wiring: draws the scene as SVG and forwards clicks to the app.

import { PlayApp } from "./app.js";
import { HttpTransport } from "./client.js";
import { Countdown } from "./countdown.js";
import type { Scene } from "./render.js";

const SIZE = 320;
const CENTER = SIZE / 2;

function draw(scene: Scene, app: PlayApp): void {
  const svg = document.getElementById("net")!;
  svg.innerHTML = "";
  const at = new Map(scene.nodes.map((n) => [n.id, n]));

  for (const edge of scene.edges) {
    const a = at.get(edge.a)!;
    const b = at.get(edge.b)!;
    const line = document.createElementNS("http://www.w3.org/2000/svg", "line");
    line.setAttribute("x1", String(CENTER + a.x));
    line.setAttribute("y1", String(CENTER + a.y));
    line.setAttribute("x2", String(CENTER + b.x));
    line.setAttribute("y2", String(CENTER + b.y));
    line.setAttribute("class", edge.selectable ? "edge selectable" : "edge");
    if (edge.selectable) {
      line.addEventListener("click", () => {
        if (confirm(`Delete your link ${edge.a}-${edge.b}?`)) {
          void app.clickEdge(edge.a, edge.b);
        }
      });
    }
    svg.appendChild(line);
  }

  for (const node of scene.nodes) {
    const dot = document.createElementNS("http://www.w3.org/2000/svg", "circle");
    dot.setAttribute("cx", String(CENTER + node.x));
    dot.setAttribute("cy", String(CENTER + node.y));
    dot.setAttribute("r", node.isYou ? "14" : "10");
    dot.setAttribute("class", node.isYou ? "node you" : "node");
    svg.appendChild(dot);
    const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
    label.setAttribute("x", String(CENTER + node.x));
    label.setAttribute("y", String(CENTER + node.y + 4));
    label.setAttribute("class", "label");
    label.textContent = String(node.id);
    svg.appendChild(label);
  }

  const keep = document.getElementById("keep") as HTMLButtonElement;
  keep.disabled = !scene.keepEnabled;
  const status = document.getElementById("status")!;
  if (scene.status === "finished" && scene.payoffs) {
    status.textContent = `Finished. Payoffs: ${scene.payoffs.join(", ")}`;
    keep.hidden = true;
  } else {
    status.textContent = scene.keepEnabled ? "Your turn." : "Waiting...";
  }
  document.getElementById("notice")!.textContent = scene.notice ?? "";
}

function start(): void {
  const transport = new HttpTransport("");
  const clock = document.getElementById("clock")!;
  let app: PlayApp;
  const countdown = new Countdown(
    (s) => (clock.textContent = s > 0 ? `${Math.ceil(s)}s` : ""),
    () => void app.countdownExpired(),
  );
  app = new PlayApp(transport, (scene) => {
    draw(scene, app);
    countdown.arm(scene.keepEnabled ? scene.secondsLeft : null);
  });

  document.getElementById("keep")!.addEventListener("click", () => void app.clickKeep());
  const params = new URLSearchParams(location.search);
  void app.start({ network: params.get("network") ?? "1R3" });
}

start();
