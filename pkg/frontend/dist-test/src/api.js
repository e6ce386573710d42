// Typed client for the interpolation server. The explorer never computes
// geometry itself: every curve point, invariant and disposition string shown
// in the UI arrives through one of these calls.
import { isSolutionRecord } from './records.js';
export class ApiError extends Error {
    status;
    code;
    kind;
    constructor(status, code, kind, message) {
        super(message);
        this.status = status;
        this.code = code;
        this.kind = kind;
    }
}
async function raiseApiError(resp) {
    let code = 'HttpError';
    let kind = 'internal';
    let message = `${resp.status}`;
    try {
        const body = (await resp.json());
        code = body.error?.code ?? code;
        kind = body.error?.kind ?? kind;
        message = body.error?.message ?? message;
    }
    catch {
        /* non-JSON error body */
    }
    throw new ApiError(resp.status, code, kind, message);
}
export function problemQuery(p) {
    const q = new URLSearchParams({
        ax: String(p.ax), ay: String(p.ay), atau: String(p.atau), ak: String(p.ak),
        bx: String(p.bx), by: String(p.by), btau: String(p.btau), bk: String(p.bk),
        unit: p.unit,
    });
    return q.toString();
}
export function problemBody(p) {
    return {
        schema: 'spiralinv/problem/1',
        angle_unit: p.unit,
        A: { x: p.ax, y: p.ay, tau: p.atau, k: p.ak },
        B: { x: p.bx, y: p.by, tau: p.btau, k: p.bk },
    };
}
export async function solveProblem(base, p) {
    const resp = await fetch(`${base}/solve`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(problemBody(p)),
    });
    if (!resp.ok)
        await raiseApiError(resp);
    return (await resp.json());
}
export async function fetchFamily(base, p, dthetaDeg, samples) {
    const url = `${base}/family?${problemQuery(p)}&dtheta_deg=${dthetaDeg}&samples=${samples}`;
    const resp = await fetch(url);
    if (!resp.ok)
        await raiseApiError(resp);
    return (await resp.json());
}
export async function fetchCubics(base, p, samples) {
    const resp = await fetch(`${base}/cubics?${problemQuery(p)}&samples=${samples}`);
    if (!resp.ok)
        await raiseApiError(resp);
    return (await resp.json());
}
/**
 * Member fetches with latest-wins cancellation: starting a new fetch aborts
 * the in-flight one, and an aborted fetch resolves to null so stale scrub
 * positions never reach the canvas.
 */
export class MemberFetcher {
    base;
    controller = null;
    constructor(base) {
        this.base = base;
    }
    async fetch(p, thetaDeg, root, samples) {
        this.controller?.abort();
        const controller = new AbortController();
        this.controller = controller;
        const url = `${this.base}/member?${problemQuery(p)}` +
            `&theta_deg=${thetaDeg}&root=${root}&samples=${samples}`;
        let resp;
        try {
            resp = await fetch(url, { signal: controller.signal });
        }
        catch (err) {
            if (controller.signal.aborted)
                return null;
            throw err;
        }
        if (controller.signal.aborted)
            return null;
        if (!resp.ok)
            await raiseApiError(resp);
        const raw = await resp.text();
        const record = JSON.parse(raw);
        if (!isSolutionRecord(record)) {
            throw new ApiError(200, 'BadRecord', 'internal', 'malformed solution record');
        }
        return { record, raw };
    }
}
