// Wire types for the interpolation server's JSON documents, plus the
// export helpers. Every displayed number traces back to one of these fields.
export function isSampleBlock(o) {
    if (typeof o !== 'object' || o === null)
        return false;
    const b = o;
    return ['t', 'x', 'y', 'tau', 's', 'k'].every((key) => Array.isArray(b[key]) && b[key].every((v) => typeof v === 'number'));
}
export function isSolutionRecord(o) {
    if (typeof o !== 'object' || o === null)
        return false;
    const r = o;
    return (typeof r.schema === 'string' &&
        r.schema.startsWith('spiralinv/solution-record/') &&
        (r.degree === 3 || r.degree === 4) &&
        typeof r.theta_deg === 'number' &&
        typeof r.r0 === 'number' &&
        isSampleBlock(r.samples));
}
export function exportFilename(rec, ext) {
    const theta = rec.theta_deg.toFixed(2).replace('-', 'm').replace('.', 'p');
    return `spiral-deg${rec.degree}-theta${theta}-root${rec.root}.${ext}`;
}
const fmt = (v) => {
    const s = String(v);
    return s.length > 9 ? v.toPrecision(6) : s;
};
/** Standalone two-panel SVG (shape | curvature vs arc length) of one record. */
export function memberSvg(rec) {
    const { x, y, s, k } = rec.samples;
    const panel = 360;
    const margin = 24;
    const place = (vals, lo, hi, flip) => {
        const span = Math.max(hi - lo, 1e-12);
        return vals.map((v) => {
            const u = ((v - lo) / span) * (panel - 2 * margin) + margin;
            return flip ? panel - u : u;
        });
    };
    const bx = [Math.min(...x), Math.max(...x)];
    const by = [Math.min(...y), Math.max(...y)];
    // keep the shape panel isotropic
    const spanMax = Math.max(bx[1] - bx[0], by[1] - by[0], 1e-12);
    const cxm = 0.5 * (bx[0] + bx[1]);
    const cym = 0.5 * (by[0] + by[1]);
    const px = place(x, cxm - spanMax / 2, cxm + spanMax / 2, false);
    const py = place(y, cym - spanMax / 2, cym + spanMax / 2, true);
    const ps = place(s, 0, Math.max(...s, 1e-12), false).map((v) => v + panel + 30);
    const pk = place(k, Math.min(...k), Math.max(...k), true);
    const pts = (xs, ys) => xs.map((v, i) => `${fmt(v)},${fmt(ys[i])}`).join(' ');
    const meta = `degree ${rec.degree}, theta ${rec.theta_deg.toFixed(3)} deg` +
        (rec.T !== null ? `, T ${rec.T.toFixed(5)}` : '');
    return (`<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="${2 * panel + 30}" height="${panel}">\n` +
        `<text x="${margin}" y="14" font-size="11" fill="#444">${meta}</text>\n` +
        `<polyline class="curve" fill="none" stroke="#1f77b4" stroke-width="1.4" points="${pts(px, py)}"/>\n` +
        `<polyline class="curvature-plot" fill="none" stroke="#d62728" stroke-width="1.2" points="${pts(ps, pk)}"/>\n` +
        `</svg>\n`);
}
