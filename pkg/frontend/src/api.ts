// Typed client for the interpolation server. The explorer never computes
// geometry itself: every curve point, invariant and disposition string shown
// in the UI arrives through one of these calls.

import type { CubicsDoc, FamilyDoc, SolutionRecord, SolveDoc } from './records.js'
import { isSolutionRecord } from './records.js'

export interface ProblemForm {
  ax: number
  ay: number
  atau: number
  ak: number
  bx: number
  by: number
  btau: number
  bk: number
  unit: 'degrees' | 'radians'
}

export class ApiError extends Error {
  readonly status: number
  readonly code: string
  readonly kind: string

  constructor(status: number, code: string, kind: string, message: string) {
    super(message)
    this.status = status
    this.code = code
    this.kind = kind
  }
}

async function raiseApiError(resp: Response): Promise<never> {
  let code = 'HttpError'
  let kind = 'internal'
  let message = `${resp.status}`
  try {
    const body = (await resp.json()) as { error?: { code?: string; kind?: string; message?: string } }
    code = body.error?.code ?? code
    kind = body.error?.kind ?? kind
    message = body.error?.message ?? message
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(resp.status, code, kind, message)
}

export function problemQuery(p: ProblemForm): string {
  const q = new URLSearchParams({
    ax: String(p.ax), ay: String(p.ay), atau: String(p.atau), ak: String(p.ak),
    bx: String(p.bx), by: String(p.by), btau: String(p.btau), bk: String(p.bk),
    unit: p.unit,
  })
  return q.toString()
}

export function problemBody(p: ProblemForm): unknown {
  return {
    schema: 'spiralinv/problem/1',
    angle_unit: p.unit,
    A: { x: p.ax, y: p.ay, tau: p.atau, k: p.ak },
    B: { x: p.bx, y: p.by, tau: p.btau, k: p.bk },
  }
}

export async function solveProblem(base: string, p: ProblemForm): Promise<SolveDoc> {
  const resp = await fetch(`${base}/solve`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(problemBody(p)),
  })
  if (!resp.ok) await raiseApiError(resp)
  return (await resp.json()) as SolveDoc
}

export async function fetchFamily(
  base: string, p: ProblemForm, dthetaDeg: number, samples: number,
): Promise<FamilyDoc> {
  const url = `${base}/family?${problemQuery(p)}&dtheta_deg=${dthetaDeg}&samples=${samples}`
  const resp = await fetch(url)
  if (!resp.ok) await raiseApiError(resp)
  return (await resp.json()) as FamilyDoc
}

export async function fetchCubics(
  base: string, p: ProblemForm, samples: number,
): Promise<CubicsDoc> {
  const resp = await fetch(`${base}/cubics?${problemQuery(p)}&samples=${samples}`)
  if (!resp.ok) await raiseApiError(resp)
  return (await resp.json()) as CubicsDoc
}

export interface MemberResult {
  record: SolutionRecord
  /** Verbatim response body; exports pass this through unmodified. */
  raw: string
}

/**
 * Member fetches with latest-wins cancellation: starting a new fetch aborts
 * the in-flight one, and an aborted fetch resolves to null so stale scrub
 * positions never reach the canvas.
 */
export class MemberFetcher {
  private controller: AbortController | null = null

  constructor(private readonly base: string) {}

  async fetch(
    p: ProblemForm, thetaDeg: number, root: number, samples: number,
  ): Promise<MemberResult | null> {
    this.controller?.abort()
    const controller = new AbortController()
    this.controller = controller
    const url = `${this.base}/member?${problemQuery(p)}` +
      `&theta_deg=${thetaDeg}&root=${root}&samples=${samples}`
    let resp: Response
    try {
      resp = await fetch(url, { signal: controller.signal })
    } catch (err) {
      if (controller.signal.aborted) return null
      throw err
    }
    if (controller.signal.aborted) return null
    if (!resp.ok) await raiseApiError(resp)
    const raw = await resp.text()
    const record: unknown = JSON.parse(raw)
    if (!isSolutionRecord(record)) {
      throw new ApiError(200, 'BadRecord', 'internal', 'malformed solution record')
    }
    return { record, raw }
  }
}
