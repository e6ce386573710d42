import type { FamilyDoc, Invariants, SolutionRecord } from '../src/records.js'
import type { ProblemForm } from '../src/api.js'

export function sampleRecord(thetaDeg: number, degree: 3 | 4 = 4): SolutionRecord {
  const n = 9
  const t = Array.from({ length: n }, (_, i) => i / (n - 1))
  return {
    schema: 'spiralinv/solution-record/1',
    degree,
    theta_rad: (thetaDeg * Math.PI) / 180,
    theta_deg: thetaDeg,
    root: 2,
    j: -1,
    N: 1.5,
    w: degree === 4 ? -0.4 : 0.42,
    pw: -1.2,
    qw: -0.9,
    r0: 3.2,
    lambda0_rad: 2.0,
    lambda0_deg: (2.0 * 180) / Math.PI,
    T: degree === 3 ? -0.06 : null,
    samples: {
      t,
      x: t.map((u) => 2 * u - 1),
      y: t.map((u) => u * (1 - u)),
      tau: t.map((u) => 0.3 * u),
      s: t.map((u) => 2.2 * u),
      k: t.map((u) => -0.4 + 0.7 * u),
    },
  }
}

export function sampleInvariants(): Invariants {
  return {
    g1: -0.9,
    g2: 1.166,
    Q: -0.549,
    sigma_rad: Math.PI / 2,
    sigma_deg: 90,
    omega_rad: Math.PI / 4,
    gamma_rad: 2.879,
    gamma_deg: 165,
    long_spiral: true,
    reflected: false,
    theta_range: {
      Theta_rad: Math.PI / 2,
      Theta_deg: 90,
      Theta0_rad: 1.98,
      Theta1_rad: Math.PI / 2,
    },
  }
}

export function sampleFamily(thetas: number[]): FamilyDoc {
  return {
    schema: 'spiralinv/family/1',
    invariants: sampleInvariants(),
    solutions: thetas.map((t) => sampleRecord(t)),
    rejected: [{ theta_deg: 40, root: 2, status: 'non_spiral', detail: '' }],
  }
}

export function sampleProblem(): ProblemForm {
  return {
    ax: -1, ay: 0, atau: -150, ak: -0.4,
    bx: 1, by: 0, btau: -120, bk: 0.3,
    unit: 'degrees',
  }
}
