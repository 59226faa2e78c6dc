import init, { analyze, duopoly_heatmap, puu_probe } from "./pkg/flatgame_web.js";

const $ = (id) => document.getElementById(id);

function guard(target, f) {
  try {
    f();
  } catch (e) {
    target.innerHTML = "";
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = e.message ?? String(e);
    target.append(p);
  }
}

function cell(tag, text) {
  const el = document.createElement(tag);
  el.textContent = text;
  return el;
}

function showAnalysis() {
  const out = $("analysis");
  guard(out, () => {
    const v = JSON.parse(analyze($("game").value));
    const table = document.createElement("table");
    const head = document.createElement("tr");
    for (const h of ["profile", "payoffs", "flat", "concepts"]) head.append(cell("th", h));
    table.append(head);
    for (const e of v.profiles) {
      const tr = document.createElement("tr");
      tr.append(
        cell("td", `(${e.profile.join(",")})`),
        cell("td", e.payoffs.join(":")),
        cell("td", e.flat.join(":")),
        cell("td", e.concepts.join(" ")),
      );
      table.append(tr);
    }
    out.replaceChildren(cell("p", `${v.title} (${v.rows}x${v.cols})`), table);
  });
}

function drawHeatmap() {
  const status = $("heatmap-status");
  guard(status, () => {
    const n = Number($("points").value);
    const v = JSON.parse(duopoly_heatmap($("model").value, Number($("l").value), Number($("c").value), n));
    const ctx = $("canvas").getContext("2d");
    const size = $("canvas").width / n;
    const values = v.flat.flat();
    const lo = Math.min(...values), hi = Math.max(...values);
    const index = new Map(v.nodes.map((x, i) => [x, i]));
    ctx.clearRect(0, 0, $("canvas").width, $("canvas").height);
    // x runs left to right, y bottom to top
    for (let i = 0; i < n; i++) {
      for (let j = 0; j < n; j++) {
        const t = hi > lo ? (v.flat[i][j] - lo) / (hi - lo) : 0.5;
        const g = Math.round(255 * (1 - t));
        ctx.fillStyle = v.analytic_me[i][j] ? "#d22" : `rgb(${g},${g},${g})`;
        ctx.fillRect(i * size, (n - 1 - j) * size, size, size);
      }
    }
    ctx.strokeStyle = "#15f";
    for (const [x, y] of v.grid_me) {
      const i = index.get(x), j = index.get(y);
      ctx.beginPath();
      ctx.arc((i + 0.5) * size, (n - 0.5 - j) * size, size / 2, 0, 2 * Math.PI);
      ctx.stroke();
    }
    status.textContent = `${v.model}: flat payoff in [${lo.toPrecision(4)}, ${hi.toPrecision(4)}], ${v.grid_me.length} grid m-equilibria`;
  });
}

function probe() {
  const out = $("probe-out");
  guard(out, () => {
    const v = JSON.parse(puu_probe(Number($("pl").value), Number($("px").value), Number($("py").value), Number($("ptol").value)));
    out.textContent = [
      `L* = ${v.lstar} in [${v.bracket[0]}, ${v.bracket[1]}]${v.certified ? " (sign change verified exactly)" : ""}`,
      `(${v.point.join(", ")}) passes sampled deviation check: ${v.sampled_me}`,
      `(${v.point.join(", ")}) in closed-form set: ${v.closed_form_me}`,
    ].join("\n");
  });
}

await init();
$("analyze").onclick = showAnalysis;
$("heatmap").onclick = drawHeatmap;
$("probe").onclick = probe;
showAnalysis();
