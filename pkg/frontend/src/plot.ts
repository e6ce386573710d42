// Plotting transforms: data bounds -> canvas pixels, plus overlay geometry
// derived from server-provided record fields (control products, curvature
// circles). This is the only "math" the explorer performs.

export interface Box {
  xmin: number
  xmax: number
  ymin: number
  ymax: number
}

export function bounds(xs: number[], ys: number[]): Box {
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity
  for (const v of xs) {
    if (v < xmin) xmin = v
    if (v > xmax) xmax = v
  }
  for (const v of ys) {
    if (v < ymin) ymin = v
    if (v > ymax) ymax = v
  }
  return { xmin, xmax, ymin, ymax }
}

export function mergeBoxes(a: Box, b: Box): Box {
  return {
    xmin: Math.min(a.xmin, b.xmin),
    xmax: Math.max(a.xmax, b.xmax),
    ymin: Math.min(a.ymin, b.ymin),
    ymax: Math.max(a.ymax, b.ymax),
  }
}

export interface Transform {
  sx: number
  sy: number
  map(x: number, y: number): [number, number]
}

/** Fit a data box into a width x height canvas with a margin; y flips. */
export function makeTransform(
  box: Box, width: number, height: number, margin: number, keepAspect = true,
): Transform {
  const spanx = Math.max(box.xmax - box.xmin, 1e-12)
  const spany = Math.max(box.ymax - box.ymin, 1e-12)
  let sx = (width - 2 * margin) / spanx
  let sy = (height - 2 * margin) / spany
  if (keepAspect) sx = sy = Math.min(sx, sy)
  const cx = 0.5 * (width - sx * spanx) - sx * box.xmin
  const cy = 0.5 * (height - sy * spany) + sy * box.ymax
  const fx = sx, fy = sy
  return {
    sx: fx,
    sy: fy,
    map: (x: number, y: number): [number, number] => [cx + fx * x, cy - fy * y],
  }
}

export function polylinePixels(
  xs: number[], ys: number[], tf: Transform,
): [number, number][] {
  const out: [number, number][] = []
  for (let i = 0; i < xs.length; i++) out.push(tf.map(xs[i], ys[i]))
  return out
}

export interface CircleSpec {
  cx: number
  cy: number
  r: number
}

/** Osculating circle of a G2 element; null when curvature is ~0 (a line). */
export function curvatureCircle(
  x: number, y: number, tauRad: number, k: number,
): CircleSpec | null {
  if (Math.abs(k) < 1e-9) return null
  const r = 1 / k
  return { cx: x - r * Math.sin(tauRad), cy: y + r * Math.cos(tauRad), r: Math.abs(r) }
}

/**
 * Control polygon A-P-B of the carrier conic in the construction frame,
 * from the record's control products; null when the control point is at
 * infinity (w = 0).
 */
export function controlPolygon(rec: { w: number; pw: number; qw: number }):
  [number, number][] | null {
  if (rec.w === 0) return null
  return [[-1, 0], [rec.pw / rec.w, rec.qw / rec.w], [1, 0]]
}

/**
 * Carrier-conic preimage polyline in the construction frame, evaluated from
 * the record's weight data. Splits at parameter gaps where the conic passes
 * through infinity.
 */
export function conicPreimage(
  rec: { w: number; pw: number; qw: number; j: number }, n = 160,
): [number, number][][] {
  const segs: [number, number][][] = []
  let cur: [number, number][] = []
  for (let i = 0; i <= n; i++) {
    const t = i / n
    const u = 1 - t
    const X = -u * u + 2 * rec.pw * u * t + rec.j * t * t
    const Y = 2 * rec.qw * t * u
    const W = u * u + 2 * rec.w * u * t + rec.j * t * t
    if (Math.abs(W) < 1e-4 || Math.abs(X / W) > 50 || Math.abs(Y / W) > 50) {
      if (cur.length > 1) segs.push(cur)
      cur = []
      continue
    }
    cur.push([X / W, Y / W])
  }
  if (cur.length > 1) segs.push(cur)
  return segs
}

/** Tick spacing: largest power-of-ten multiple (1/2/5) below span/4. */
export function tickStep(span: number): number {
  const raw = span / 4
  const mag = Math.pow(10, Math.floor(Math.log10(raw)))
  for (const m of [5, 2, 1]) {
    if (m * mag <= raw) return m * mag
  }
  return mag
}
