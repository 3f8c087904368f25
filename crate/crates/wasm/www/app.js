// Demo page logic: all math happens in the wasm module; this file only
// parses its JSON and draws SVG.

import init, { analyze_graph, tree_poset, graph_moves } from "./pkg/nestohedra_wasm.js";

const SVGNS = "http://www.w3.org/2000/svg";

// ---------- small helpers ----------

function el(tag, attrs = {}, children = []) {
  const node = document.createElementNS(SVGNS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  for (const c of children) node.appendChild(c);
  return node;
}

function polyString(coeffs) {
  if (!coeffs || coeffs.length === 0) return "0";
  const sup = "⁰¹²³⁴⁵⁶⁷⁸⁹";
  return coeffs
    .map((c, i) => {
      if (i === 0) return `${c}`;
      const t = i === 1 ? "t" : "t" + String(i).split("").map(d => sup[+d]).join("");
      return c === 1 ? t : `${c}${t}`;
    })
    .join(" + ");
}

// ---------- tree / graph layout ----------

// Adjacency lists from a 1-based edge list.
function adjacency(n, edges) {
  const adj = Array.from({ length: n + 1 }, () => []);
  for (const [u, v] of edges) { adj[u].push(v); adj[v].push(u); }
  return adj;
}

function isTreeGraph(n, edges) {
  if (edges.length !== n - 1) return false;
  const adj = adjacency(n, edges);
  const seen = new Set([1]);
  const stack = [1];
  while (stack.length) {
    const u = stack.pop();
    for (const v of adj[u]) if (!seen.has(v)) { seen.add(v); stack.push(v); }
  }
  return seen.size === n;
}

// Layered tree layout rooted at a centroid: x by leaf order, y by depth.
function treeLayout(n, edges) {
  const adj = adjacency(n, edges);
  // centroid: minimize the largest remaining component
  let centroid = 1, best = Infinity;
  for (let v = 1; v <= n; v++) {
    const seen = new Set([v]);
    let largest = 0;
    for (const w of adj[v]) {
      if (seen.has(w)) continue;
      let size = 0;
      const stack = [w];
      seen.add(w);
      while (stack.length) {
        const u = stack.pop();
        size++;
        for (const x of adj[u]) if (!seen.has(x)) { seen.add(x); stack.push(x); }
      }
      largest = Math.max(largest, size);
    }
    if (largest < best) { best = largest; centroid = v; }
  }
  const pos = {};
  let nextLeafX = 0;
  function place(u, parent, depth) {
    const children = adj[u].filter(v => v !== parent);
    if (children.length === 0) {
      pos[u] = { x: nextLeafX++, y: depth };
      return pos[u].x;
    }
    const xs = children.map(v => place(v, u, depth + 1));
    const x = (Math.min(...xs) + Math.max(...xs)) / 2;
    pos[u] = { x, y: depth };
    return x;
  }
  place(centroid, 0, 0);
  return pos;
}

// Circular layout for non-tree graphs.
function circleLayout(n) {
  const pos = {};
  for (let v = 1; v <= n; v++) {
    const a = (2 * Math.PI * (v - 1)) / n - Math.PI / 2;
    pos[v] = { x: Math.cos(a), y: Math.sin(a) };
  }
  return pos;
}

// Draws a graph into a w x h SVG group; returns the group element.
function drawGraph(n, edges, w, h, opts = {}) {
  const pos = isTreeGraph(n, edges) ? treeLayout(n, edges) : circleLayout(n);
  const xs = Object.values(pos).map(p => p.x);
  const ys = Object.values(pos).map(p => p.y);
  const minx = Math.min(...xs), maxx = Math.max(...xs);
  const miny = Math.min(...ys), maxy = Math.max(...ys);
  const pad = opts.pad ?? 8;
  const sx = (w - 2 * pad) / Math.max(maxx - minx, 0.01);
  const sy = (h - 2 * pad) / Math.max(maxy - miny, 0.01);
  const s = Math.min(sx, sy);
  const ox = pad + (w - 2 * pad - s * (maxx - minx)) / 2;
  const oy = pad + (h - 2 * pad - s * (maxy - miny)) / 2;
  const project = v => [ox + s * (pos[v].x - minx), oy + s * (pos[v].y - miny)];
  const g = el("g");
  for (const [u, v] of edges) {
    const [x1, y1] = project(u);
    const [x2, y2] = project(v);
    g.appendChild(el("line", { x1, y1, x2, y2, stroke: "#3f4a5c", "stroke-width": 1.4 }));
  }
  const r = opts.r ?? 3.2;
  for (let v = 1; v <= n; v++) {
    const [cx, cy] = project(v);
    g.appendChild(el("circle", { cx, cy, r, fill: "#1c2431" }));
    if (opts.labels) {
      g.appendChild(Object.assign(el("text", {
        x: cx + 5, y: cy - 4, "font-size": 10, fill: "#6b7280",
      }), { textContent: String(v) }));
    }
  }
  return g;
}

function standaloneDrawing(holder, n, edges, w, h, labels) {
  holder.innerHTML = "";
  const svg = el("svg", { viewBox: `0 0 ${w} ${h}`, width: w, height: h });
  svg.appendChild(drawGraph(n, edges, w, h, { labels, r: 4.5 }));
  holder.appendChild(svg);
}

// ---------- poset panel ----------

const posetHolder = document.getElementById("poset-holder");
const posetStatus = document.getElementById("poset-status");

function renderPoset(data) {
  const { nodes, shift_edges, floss_edges } = data;
  // group node indices by leaf count, descending (star on top)
  const classes = new Map();
  nodes.forEach((node, i) => {
    if (!classes.has(node.leaves)) classes.set(node.leaves, []);
    classes.get(node.leaves).push(i);
  });
  const rows = [...classes.keys()].sort((a, b) => b - a);
  const boxW = 104, boxH = 96, gapX = 26, rowGap = 74;
  const maxRow = Math.max(...rows.map(l => classes.get(l).length));
  const width = Math.max(640, maxRow * (boxW + gapX) + 80);
  const height = rows.length * (boxH + rowGap) + 30;
  const centers = {};
  const svg = el("svg", { viewBox: `0 0 ${width} ${height}`, class: "poset" });
  svg.appendChild(el("defs", {}, [
    el("marker", { id: "arrow", viewBox: "0 0 8 8", refX: 7, refY: 4, markerWidth: 6, markerHeight: 6, orient: "auto-start-reverse" }, [
      el("path", { d: "M0,0 L8,4 L0,8 z", fill: "#3f4a5c" }),
    ]),
    el("marker", { id: "arrow2", viewBox: "0 0 8 8", refX: 7, refY: 4, markerWidth: 6, markerHeight: 6, orient: "auto-start-reverse" }, [
      el("path", { d: "M0,0 L8,4 L0,8 z", fill: "#b3422c" }),
    ]),
  ]));
  const boxes = el("g");
  rows.forEach((leaves, rowIdx) => {
    const members = classes.get(leaves);
    const rowWidth = members.length * boxW + (members.length - 1) * gapX;
    const x0 = (width - rowWidth) / 2;
    const y = 16 + rowIdx * (boxH + rowGap);
    members.forEach((idx, k) => {
      const x = x0 + k * (boxW + gapX);
      centers[idx] = { x: x + boxW / 2, top: y, bottom: y + boxH };
      const node = nodes[idx];
      const group = el("g", { class: "node-box" });
      group.appendChild(el("rect", {
        x, y, width: boxW, height: boxH, rx: 8,
        fill: "#fdfcf9", stroke: "#cfc9bb",
      }));
      const drawing = drawGraph(node.edges.length + 1, node.edges, boxW - 12, boxH - 30);
      drawing.setAttribute("transform", `translate(${x + 6}, ${y + 4})`);
      group.appendChild(drawing);
      group.appendChild(Object.assign(el("text", {
        x: x + boxW / 2, y: y + boxH - 8, "text-anchor": "middle",
        "font-size": 11, "font-family": "ui-monospace, monospace", fill: "#2456a5",
      }), { textContent: node.gamma.join(" ") }));
      const title = Object.assign(el("title"), {
        textContent: `${node.leaves} leaves\ngamma: ${polyString(node.gamma)}\ncode: ${node.code}`,
      });
      group.appendChild(title);
      group.addEventListener("click", () => loadIntoAnalyzer(node.edges.length + 1, node.edges));
      boxes.appendChild(group);
    });
  });
  const edgesG = el("g");
  for (const [a, b] of shift_edges) {
    edgesG.appendChild(el("line", {
      x1: centers[a].x, y1: centers[a].bottom,
      x2: centers[b].x, y2: centers[b].top - 2,
      stroke: "#3f4a5c", "stroke-width": 1.1, "marker-end": "url(#arrow)", opacity: 0.75,
    }));
  }
  for (const [a, b] of floss_edges) {
    const midY = centers[a].top - 26;
    edgesG.appendChild(el("path", {
      d: `M ${centers[a].x} ${centers[a].top} C ${centers[a].x} ${midY}, ${centers[b].x} ${midY}, ${centers[b].x} ${centers[b].top - 2}`,
      fill: "none", stroke: "#b3422c", "stroke-width": 1.2,
      "stroke-dasharray": "5 4", "marker-end": "url(#arrow2)",
    }));
  }
  svg.appendChild(edgesG);
  svg.appendChild(boxes);
  posetHolder.innerHTML = "";
  posetHolder.appendChild(svg);
  posetStatus.textContent =
    `${nodes.length} trees, ${shift_edges.length} shift arrows, ${floss_edges.length} flossing arrows`;
}

function refreshPoset() {
  const n = +document.getElementById("poset-n").value;
  posetStatus.textContent = "computing…";
  setTimeout(() => {
    try {
      renderPoset(JSON.parse(tree_poset(n)));
    } catch (e) {
      posetStatus.textContent = String(e);
    }
  }, 10);
}

// ---------- analyzer panel ----------

const presets = {
  path: n => Array.from({ length: n - 1 }, (_, i) => [i + 1, i + 2]),
  star: n => Array.from({ length: n - 1 }, (_, i) => [1, i + 2]),
  cycle: n => Array.from({ length: n }, (_, i) => [i + 1, (i + 1) % n + 1])
    .map(([a, b]) => (a < b ? [a, b] : [b, a])),
  complete: n => {
    const out = [];
    for (let u = 1; u <= n; u++) for (let v = u + 1; v <= n; v++) out.push([u, v]);
    return out;
  },
  spider: () => [[1, 2], [2, 3], [1, 4], [4, 5], [1, 6]],
};

let currentGraph = { n: 6, edges: presets.spider() };

function loadIntoAnalyzer(n, edges) {
  document.getElementById("preset").value = "custom";
  document.getElementById("analyze-n").value = n;
  document.getElementById("edges").value = JSON.stringify(edges);
  runAnalysis();
  document.getElementById("analyze-section").scrollIntoView({ behavior: "smooth" });
}

function runAnalysis() {
  const errBox = document.getElementById("analyze-err");
  errBox.textContent = "";
  const n = +document.getElementById("analyze-n").value;
  const edgesText = document.getElementById("edges").value;
  let report;
  try {
    report = JSON.parse(analyze_graph(n, edgesText));
  } catch (e) {
    errBox.textContent = String(e);
    return;
  }
  currentGraph = { n: report.n, edges: report.edges };
  standaloneDrawing(document.getElementById("analyze-drawing"), report.n, report.edges, 260, 200, true);
  const agree = report.engines_agree;
  const agreeHtml = agree === null || agree === undefined
    ? `<span class="hint">oracle skipped (graph too large for the census)</span>`
    : agree
      ? `<span class="ok">✓ oracle agrees</span>`
      : `<span class="bad">✗ oracle disagrees!</span>`;
  const rows = [
    `<div class="gamma">γ = <b>${polyString(report.gamma)}</b> &nbsp;${agreeHtml}</div>`,
    `<div class="stat">connected: <b>${report.connected}</b>, tree: <b>${report.tree}</b>, leaves: <b>${report.leaves}</b></div>`,
    `<div class="stat">polytope dimension: <b>${report.dimension}</b>, flag: <b>${report.flag}</b></div>`,
  ];
  if (report.f) rows.push(`<div class="stat">f = <b>${polyString(report.f)}</b></div>`);
  if (report.h) rows.push(`<div class="stat">h = <b>${polyString(report.h)}</b> (symmetric)</div>`);
  if (report.wiener !== null && report.wiener !== undefined) {
    rows.push(`<div class="stat">Wiener index: <b>${report.wiener}</b></div>`);
  }
  document.getElementById("analyze-result").innerHTML = rows.join("");
  resetWalk();
}

// ---------- moves panel ----------

let walkGraph = null;
let trajectory = [];

function resetWalk() {
  walkGraph = { ...currentGraph };
  trajectory = [];
  refreshMoves("restarted");
}

function refreshMoves(note) {
  const status = document.getElementById("moves-status");
  const holder = document.getElementById("moves-table");
  standaloneDrawing(document.getElementById("walk-drawing"), walkGraph.n, walkGraph.edges, 240, 190, true);
  let moves;
  try {
    moves = JSON.parse(graph_moves(walkGraph.n, JSON.stringify(walkGraph.edges)));
  } catch (e) {
    status.textContent = String(e);
    holder.innerHTML = "";
    return;
  }
  if (trajectory.length === 0 && moves.length > 0) {
    trajectory.push(`start: γ = ${polyString(moves[0].gamma_before)}`);
  } else if (trajectory.length === 0) {
    trajectory.push("start (no moves available)");
  }
  status.textContent = `${moves.length} moves available${note ? " — " + note : ""}`;
  if (moves.length === 0) {
    holder.innerHTML = `<p class="hint">No legal moves: this is a minimum of its order (a path, or no pendant structure to rewrite).</p>`;
  } else {
    const rows = moves.map((m, i) => `
      <tr class="clickable" data-idx="${i}">
        <td>${m.kind}</td>
        <td>${m.label}</td>
        <td>${polyString(m.gamma_after)}</td>
        <td>${m.leaves_after - m.leaves_before}</td>
        <td>${m.wiener_after - m.wiener_before >= 0 ? "+" : ""}${m.wiener_after - m.wiener_before}</td>
        <td>${m.lowers_gamma ? "✓" : "✗"}</td>
      </tr>`).join("");
    holder.innerHTML = `
      <table class="moves">
        <thead><tr><th>kind</th><th>move</th><th>γ after</th><th>Δleaves</th><th>ΔWiener</th><th>γ lowered</th></tr></thead>
        <tbody>${rows}</tbody>
      </table>`;
    holder.querySelectorAll("tr.clickable").forEach(tr => {
      tr.addEventListener("click", () => {
        const m = moves[+tr.dataset.idx];
        walkGraph = { n: walkGraph.n, edges: m.result_edges };
        trajectory.push(`${m.kind}: ${m.label} → γ = ${polyString(m.gamma_after)} (ΔWiener ${m.wiener_after - m.wiener_before >= 0 ? "+" : ""}${m.wiener_after - m.wiener_before})`);
        refreshMoves("applied " + m.kind);
      });
    });
  }
  document.getElementById("trajectory").textContent = trajectory.join("\n");
}

// ---------- wiring ----------

function applyPreset() {
  const kind = document.getElementById("preset").value;
  if (kind === "custom") return;
  const n = kind === "spider" ? 6 : +document.getElementById("analyze-n").value;
  document.getElementById("analyze-n").value = n;
  document.getElementById("edges").value = JSON.stringify(presets[kind](n));
}

init().then(() => {
  document.getElementById("poset-n").addEventListener("change", refreshPoset);
  document.getElementById("preset").addEventListener("change", () => { applyPreset(); runAnalysis(); });
  document.getElementById("analyze-n").addEventListener("change", () => { applyPreset(); });
  document.getElementById("analyze-btn").addEventListener("click", runAnalysis);
  document.getElementById("reset-walk").addEventListener("click", resetWalk);
  refreshPoset();
  runAnalysis();
});
