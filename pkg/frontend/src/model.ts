// Explorer state and its pure transitions. The state is a view over server
// responses: theta positions come from the fetched family index, the
// selected member is always a record the server accepted, and rejections
// keep their server-side disposition string.

import type { ProblemForm } from './api.js'
import type { FamilyDoc, Invariants, SolutionRecord } from './records.js'

export interface MemberKey {
  thetaDeg: number
  root: number
  accepted: boolean
  /** Server-side disposition for rejected grid positions. */
  status?: string
}

export interface OverlayFlags {
  circles: boolean
  polygon: boolean
  conic: boolean
}

export interface ExplorerState {
  problem: ProblemForm | null
  invariants: Invariants | null
  /** Every grid (theta, root) position, ascending, spanning [-Theta, Theta];
   *  rejected positions keep their disposition so the slider can land on
   *  them and show why nothing renders. */
  thetaList: MemberKey[]
  rejected: { thetaDeg: number; status: string; detail: string }[]
  thetaIndex: number
  selected: SolutionRecord | null
  selectedRaw: string | null
  rejection: string | null
  cubics: SolutionRecord[]
  showCubics: boolean
  selectedCubic: number | null
  overlays: OverlayFlags
  staleData: boolean
  gateMessage: string | null
}

export function initialState(): ExplorerState {
  return {
    problem: null,
    invariants: null,
    thetaList: [],
    rejected: [],
    thetaIndex: 0,
    selected: null,
    selectedRaw: null,
    rejection: null,
    cubics: [],
    showCubics: false,
    selectedCubic: null,
    overlays: { circles: false, polygon: false, conic: false },
    staleData: false,
    gateMessage: null,
  }
}

export function spiralKindBadge(inv: Invariants): string {
  return inv.long_spiral ? 'long spiral' : 'short spiral'
}

/** Load a solved problem + its family index; slider starts nearest theta=0
 *  on an accepted member (the theta=0 member exists for solvable data). */
export function withProblem(
  state: ExplorerState, problem: ProblemForm, inv: Invariants, family: FamilyDoc,
): ExplorerState {
  const thetaList: MemberKey[] = family.solutions.map((s) => ({
    thetaDeg: s.theta_deg, root: s.root, accepted: true,
  }))
  const acceptedThetas = new Set(thetaList.map((k) => k.thetaDeg))
  for (const r of family.rejected) {
    if (acceptedThetas.has(r.theta_deg)) continue
    if (thetaList.some((k) => !k.accepted && k.thetaDeg === r.theta_deg)) continue
    thetaList.push({ thetaDeg: r.theta_deg, root: r.root, accepted: false,
                     status: r.status })
  }
  thetaList.sort((a, b) => a.thetaDeg - b.thetaDeg || a.root - b.root)
  let idx = 0
  let best = Infinity
  thetaList.forEach((k, i) => {
    const d = Math.abs(k.thetaDeg) + (k.accepted ? 0 : 1e6)
    if (d < best) {
      best = d
      idx = i
    }
  })
  return {
    ...initialState(),
    problem,
    invariants: inv,
    thetaList,
    rejected: family.rejected.map((r) => ({
      thetaDeg: r.theta_deg, status: r.status, detail: r.detail,
    })),
    thetaIndex: idx,
    overlays: state.overlays,
  }
}

export function withGateError(state: ExplorerState, message: string): ExplorerState {
  return { ...initialState(), overlays: state.overlays, gateMessage: message }
}

export function clampThetaIndex(state: ExplorerState, index: number): number {
  if (state.thetaList.length === 0) return 0
  return Math.min(Math.max(Math.round(index), 0), state.thetaList.length - 1)
}

export function currentKey(state: ExplorerState): MemberKey | null {
  return state.thetaList[state.thetaIndex] ?? null
}

/** The current theta always stays inside the fetched [-Theta, Theta]. */
export function scrubTo(state: ExplorerState, index: number): ExplorerState {
  const thetaIndex = clampThetaIndex(state, index)
  return { ...state, thetaIndex, selectedCubic: null }
}

export function withMember(
  state: ExplorerState, record: SolutionRecord, raw: string,
): ExplorerState {
  return { ...state, selected: record, selectedRaw: raw, rejection: null, staleData: false }
}

/** A server rejection clears the canvas model: rejected members never render. */
export function withRejection(state: ExplorerState, reason: string): ExplorerState {
  return { ...state, selected: null, selectedRaw: null, rejection: reason }
}

export function withStaleData(state: ExplorerState): ExplorerState {
  return { ...state, staleData: true }
}

export function withCubics(state: ExplorerState, cubics: SolutionRecord[]): ExplorerState {
  return { ...state, cubics, showCubics: true }
}

export function selectCubic(state: ExplorerState, index: number): ExplorerState {
  if (index < 0 || index >= state.cubics.length) return state
  const rec = state.cubics[index]
  return {
    ...state,
    selectedCubic: index,
    selected: rec,
    selectedRaw: JSON.stringify(rec, null, 2) + '\n',
    rejection: null,
  }
}

export function toggleOverlay(state: ExplorerState, key: keyof OverlayFlags): ExplorerState {
  return { ...state, overlays: { ...state.overlays, [key]: !state.overlays[key] } }
}

export function canExport(state: ExplorerState): boolean {
  return state.selected !== null && state.selectedRaw !== null
}

/** Problem entered on the standard chord: construction-frame overlays apply. */
export function isNormalizedPosition(p: ProblemForm): boolean {
  return p.ax === -1 && p.ay === 0 && p.bx === 1 && p.by === 0
}
