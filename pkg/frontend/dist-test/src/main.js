// DOM wiring for the explorer: form -> /solve + /family, slider -> /member,
// cubic toggle -> /cubics, canvas rendering and record export.
import { ApiError, MemberFetcher, fetchCubics, fetchFamily, solveProblem } from './api.js';
import { canExport, currentKey, initialState, isNormalizedPosition, scrubTo, selectCubic, spiralKindBadge, toggleOverlay, withCubics, withGateError, withMember, withProblem, withRejection, withStaleData, } from './model.js';
import { bounds, conicPreimage, controlPolygon, curvatureCircle, makeTransform, mergeBoxes, polylinePixels } from './plot.js';
import { exportFilename, memberSvg } from './records.js';
const API_BASE = '';
const SAMPLES = 256;
let state = initialState();
const fetcher = new MemberFetcher(API_BASE);
const $ = (id) => {
    const el = document.getElementById(id);
    if (!el)
        throw new Error(`missing element #${id}`);
    return el;
};
function readForm() {
    const num = (id) => {
        const v = parseFloat($(id).value);
        if (!Number.isFinite(v))
            throw new Error(`field ${id} is not a number`);
        return v;
    };
    const unit = $('unit').value === 'radians' ? 'radians' : 'degrees';
    return {
        ax: num('ax'), ay: num('ay'), atau: num('atau'), ak: num('ak'),
        bx: num('bx'), by: num('by'), btau: num('btau'), bk: num('bk'),
        unit,
    };
}
function setBadge(id, text, cls = '') {
    const el = $(id);
    el.textContent = text;
    el.className = `badge ${cls}`.trim();
}
function renderInvariants() {
    const inv = state.invariants;
    const panel = $('invariants');
    if (!inv) {
        panel.classList.add('hidden');
        return;
    }
    panel.classList.remove('hidden');
    $('inv-sigma').textContent = `${inv.sigma_deg.toFixed(4)} deg`;
    $('inv-q').textContent = inv.Q.toPrecision(6);
    $('inv-g1').textContent = inv.g1.toPrecision(6);
    $('inv-g2').textContent = inv.g2.toPrecision(6);
    $('inv-theta').textContent =
        `[-${inv.theta_range.Theta_deg.toFixed(3)}, +${inv.theta_range.Theta_deg.toFixed(3)}] deg`;
    setBadge('kind-badge', spiralKindBadge(inv), inv.long_spiral ? 'long' : 'short');
    if (inv.reflected)
        setBadge('reflect-badge', 'mirrored (decreasing curvature)');
    else
        setBadge('reflect-badge', '');
}
function renderSlider() {
    const slider = $('theta-slider');
    const n = state.thetaList.length;
    slider.disabled = n === 0;
    slider.min = '0';
    slider.max = String(Math.max(n - 1, 0));
    slider.value = String(state.thetaIndex);
    const key = currentKey(state);
    $('theta-label').textContent = key
        ? `theta = ${key.thetaDeg.toFixed(2)} deg (root ${key.root}` +
            `${key.accepted ? '' : `, ${key.status ?? 'rejected'}`}, ${n} positions)`
        : 'no members';
}
function drawPolyline(ctx, pts, color, width = 1.5, dash = []) {
    if (pts.length < 2)
        return;
    ctx.save();
    ctx.strokeStyle = color;
    ctx.lineWidth = width;
    ctx.setLineDash(dash);
    ctx.beginPath();
    ctx.moveTo(pts[0][0], pts[0][1]);
    for (let i = 1; i < pts.length; i++)
        ctx.lineTo(pts[i][0], pts[i][1]);
    ctx.stroke();
    ctx.restore();
}
function renderShape() {
    const canvas = $('shape');
    const ctx = canvas.getContext('2d');
    if (!ctx)
        return;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    const rec = state.selected;
    const prob = state.problem;
    if (!rec || !prob) {
        if (state.rejection) {
            ctx.fillStyle = '#a33';
            ctx.font = '13px sans-serif';
            ctx.fillText(`rejected: ${state.rejection}`, 16, 24);
        }
        return;
    }
    const { x, y } = rec.samples;
    let box = bounds(x, y);
    const circles = [];
    if (state.overlays.circles) {
        const conv = prob.unit === 'degrees' ? Math.PI / 180 : 1;
        for (const [px, py, tau, k] of [
            [prob.ax, prob.ay, prob.atau * conv, prob.ak],
            [prob.bx, prob.by, prob.btau * conv, prob.bk],
        ]) {
            const c = curvatureCircle(px, py, tau, k);
            if (c) {
                circles.push(c);
                box = mergeBoxes(box, {
                    xmin: c.cx - c.r, xmax: c.cx + c.r, ymin: c.cy - c.r, ymax: c.cy + c.r,
                });
            }
        }
    }
    const normalized = isNormalizedPosition(prob);
    const polygon = state.overlays.polygon && normalized ? controlPolygon(rec) : null;
    if (polygon)
        box = mergeBoxes(box, bounds(polygon.map(p => p[0]), polygon.map(p => p[1])));
    const tf = makeTransform(box, canvas.width, canvas.height, 24);
    if (state.overlays.conic && normalized) {
        for (const seg of conicPreimage(rec)) {
            drawPolyline(ctx, polylinePixels(seg.map(p => p[0]), seg.map(p => p[1]), tf), '#b8b8b8', 1, [2, 3]);
        }
    }
    for (const c of circles) {
        const pts = [];
        for (let i = 0; i <= 96; i++) {
            const u = (2 * Math.PI * i) / 96;
            pts.push(tf.map(c.cx + c.r * Math.cos(u), c.cy + c.r * Math.sin(u)));
        }
        drawPolyline(ctx, pts, '#999', 0.8, [5, 4]);
    }
    if (polygon) {
        drawPolyline(ctx, polylinePixels(polygon.map(p => p[0]), polygon.map(p => p[1]), tf), '#2ca02c', 1, [4, 3]);
    }
    drawPolyline(ctx, polylinePixels([prob.ax, prob.bx], [prob.ay, prob.by], tf), '#ddd', 1);
    drawPolyline(ctx, polylinePixels(x, y, tf), rec.degree === 3 ? '#9467bd' : '#1f77b4', 1.8);
    for (const [px, py] of [[prob.ax, prob.ay], [prob.bx, prob.by]]) {
        const [cx, cy] = tf.map(px, py);
        ctx.fillStyle = '#333';
        ctx.beginPath();
        ctx.arc(cx, cy, 3, 0, 2 * Math.PI);
        ctx.fill();
    }
}
function renderCurvature() {
    const canvas = $('curvature');
    const ctx = canvas.getContext('2d');
    if (!ctx)
        return;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    const rec = state.selected;
    if (!rec)
        return;
    const { s, k } = rec.samples;
    const box = bounds(s, k);
    const tf = makeTransform(box, canvas.width, canvas.height, 24, false);
    if (box.ymin < 0 && box.ymax > 0) {
        drawPolyline(ctx, polylinePixels([box.xmin, box.xmax], [0, 0], tf), '#ddd', 1);
    }
    drawPolyline(ctx, polylinePixels(s, k, tf), '#d62728', 1.6);
    ctx.fillStyle = '#666';
    ctx.font = '11px sans-serif';
    ctx.fillText(`k: ${box.ymin.toPrecision(4)} .. ${box.ymax.toPrecision(4)}`, 8, 14);
    ctx.fillText(`arc length ${box.xmax.toPrecision(5)}`, 8, canvas.height - 8);
}
function renderCubics() {
    const list = $('cubic-list');
    list.innerHTML = '';
    if (!state.showCubics)
        return;
    if (state.cubics.length === 0) {
        const li = document.createElement('li');
        li.textContent = 'no rational cubic members for this data';
        list.appendChild(li);
        return;
    }
    state.cubics.forEach((rec, i) => {
        const li = document.createElement('li');
        const btn = document.createElement('button');
        btn.textContent = `cubic @ theta ${rec.theta_deg.toFixed(3)} deg, T = ${rec.T?.toFixed(5)}`;
        btn.addEventListener('click', () => {
            state = selectCubic(state, i);
            render();
        });
        if (state.selectedCubic === i)
            btn.classList.add('active');
        li.appendChild(btn);
        list.appendChild(li);
    });
}
function render() {
    renderInvariants();
    renderSlider();
    renderShape();
    renderCurvature();
    renderCubics();
    $('gate-banner').textContent = state.gateMessage ?? '';
    $('gate-banner').className = state.gateMessage ? 'banner error' : 'banner hidden';
    setBadge('stale-badge', state.staleData ? 'stale data (network failure)' : '');
    const exp = canExport(state);
    $('export-json').disabled = !exp;
    $('export-svg').disabled = !exp;
}
async function loadMember() {
    const key = currentKey(state);
    const prob = state.problem;
    if (!key || !prob)
        return;
    try {
        const result = await fetcher.fetch(prob, key.thetaDeg, key.root, SAMPLES);
        if (result === null)
            return; // superseded by a newer scrub
        state = withMember(state, result.record, result.raw);
    }
    catch (err) {
        if (err instanceof ApiError && err.status === 422) {
            state = withRejection(state, err.message);
        }
        else {
            state = withStaleData(state);
        }
    }
    render();
}
async function onLoadProblem() {
    let prob;
    try {
        prob = readForm();
    }
    catch (err) {
        state = withGateError(state, String(err));
        render();
        return;
    }
    try {
        const solved = await solveProblem(API_BASE, prob);
        const family = await fetchFamily(API_BASE, prob, 2.0, 2);
        state = withProblem(state, prob, solved.invariants, family);
        render();
        await loadMember();
    }
    catch (err) {
        if (err instanceof ApiError) {
            state = withGateError(state, `${err.code}: ${err.message}`);
        }
        else {
            state = withStaleData(state);
        }
        render();
    }
}
async function onToggleCubics() {
    const prob = state.problem;
    if (!prob)
        return;
    if (state.showCubics) {
        state = { ...state, showCubics: false, selectedCubic: null };
        render();
        return;
    }
    try {
        const doc = await fetchCubics(API_BASE, prob, SAMPLES);
        state = withCubics(state, doc.solutions);
    }
    catch (err) {
        state = err instanceof ApiError
            ? withGateError(state, `${err.code}: ${err.message}`)
            : withStaleData(state);
    }
    render();
}
function download(name, text, type) {
    const blob = new Blob([text], { type });
    const a = document.createElement('a');
    a.href = URL.createObjectURL(blob);
    a.download = name;
    a.click();
    URL.revokeObjectURL(a.href);
}
function onExportJson() {
    if (!state.selected || !state.selectedRaw)
        return;
    download(exportFilename(state.selected, 'json'), state.selectedRaw, 'application/json');
}
function onExportSvg() {
    if (!state.selected)
        return;
    download(exportFilename(state.selected, 'svg'), memberSvg(state.selected), 'image/svg+xml');
}
function fillDemo() {
    const set = (id, v) => { $(id).value = v; };
    set('ax', '-1');
    set('ay', '0');
    set('atau', '-150');
    set('ak', '-0.4');
    set('bx', '1');
    set('by', '0');
    set('btau', '-120');
    set('bk', '0.3');
    $('unit').value = 'degrees';
}
export function start() {
    $('load-btn').addEventListener('click', () => { void onLoadProblem(); });
    $('demo-btn').addEventListener('click', () => { fillDemo(); void onLoadProblem(); });
    $('cubics-btn').addEventListener('click', () => { void onToggleCubics(); });
    $('export-json').addEventListener('click', onExportJson);
    $('export-svg').addEventListener('click', onExportSvg);
    const slider = $('theta-slider');
    slider.addEventListener('input', () => {
        state = scrubTo(state, parseInt(slider.value, 10));
        render();
        void loadMember();
    });
    for (const key of ['circles', 'polygon', 'conic']) {
        $(`overlay-${key}`).addEventListener('change', () => {
            state = toggleOverlay(state, key);
            render();
        });
    }
    render();
}
if (typeof document !== 'undefined' && document.getElementById('load-btn')) {
    start();
}
