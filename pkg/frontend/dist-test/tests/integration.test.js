// End-to-end: the explorer's API layer against the real interpolation
// server, plus the export/re-import loop through the CLI. Skipped when the
// Python kernel is not installed.
import assert from 'node:assert/strict';
import { execFileSync, spawn, spawnSync } from 'node:child_process';
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { after, before, test } from 'node:test';
import { MemberFetcher, fetchFamily, solveProblem } from '../src/api.js';
import { initialState, withProblem } from '../src/model.js';
const probe = spawnSync('python3', ['-c', 'import spiralinv'], { timeout: 30000 });
const HAVE_KERNEL = probe.status === 0;
const FIG = {
    ax: -1, ay: 0, atau: -150, ak: -0.4,
    bx: 1, by: 0, btau: -120, bk: 0.3,
    unit: 'degrees',
};
let base = '';
let server = null;
before(async () => {
    if (!HAVE_KERNEL)
        return;
    server = spawn('python3', ['-m', 'spiralinv', 'serve', '--port', '0'], { stdio: ['ignore', 'pipe', 'pipe'] });
    base = await new Promise((resolve, reject) => {
        const timer = setTimeout(() => reject(new Error('server did not start')), 20000);
        let buf = '';
        server.stderr.on('data', (chunk) => {
            buf += chunk.toString();
            const m = buf.match(/serving on (http:\/\/[\d.]+:\d+)/);
            if (m) {
                clearTimeout(timer);
                resolve(m[1]);
            }
        });
    });
});
after(() => {
    server?.kill();
});
test('load, scrub and export against the live kernel', { skip: !HAVE_KERNEL }, async () => {
    const solved = await solveProblem(base, FIG);
    assert.ok(Math.abs(solved.invariants.sigma_deg - 90) < 1e-9);
    assert.equal(solved.invariants.long_spiral, true);
    const family = await fetchFamily(base, FIG, 2.0, 2);
    const st = withProblem(initialState(), FIG, solved.invariants, family);
    // the slider spans the admissible range [-Theta, Theta] up to grid step
    const ThetaDeg = solved.invariants.theta_range.Theta_deg;
    const thetas = st.thetaList.map((k) => k.thetaDeg);
    assert.ok(Math.min(...thetas) <= -ThetaDeg + 2.5);
    assert.ok(Math.max(...thetas) >= ThetaDeg - 2.5);
    assert.ok(thetas.every((t) => Math.abs(t) <= ThetaDeg + 1e-9));
    // scrubbing to listed accepted thetas renders from a single fetch each
    const fetcher = new MemberFetcher(base);
    const accepted = st.thetaList.filter((k) => k.accepted);
    assert.ok(accepted.length > 0);
    for (const key of [accepted[0], accepted[Math.floor(accepted.length / 2)],
        accepted[accepted.length - 1]]) {
        const res = await fetcher.fetch(FIG, key.thetaDeg, key.root, 64);
        assert.ok(res, `member at ${key.thetaDeg} should render`);
        assert.ok(Math.abs(res.record.theta_deg - key.thetaDeg) < 1e-12);
        assert.equal(res.record.samples.x.length, 64);
    }
    // export/re-import: the exported raw record equals the CLI's record for
    // the same problem, theta and sample count, field for field
    const mid = accepted[Math.floor(accepted.length / 2)];
    const res = (await fetcher.fetch(FIG, mid.thetaDeg, mid.root, 64));
    const dir = mkdtempSync(join(tmpdir(), 'spiralinv-export-'));
    try {
        const problemPath = join(dir, 'problem.json');
        writeFileSync(problemPath, JSON.stringify({
            schema: 'spiralinv/problem/1',
            angle_unit: 'degrees',
            A: { x: FIG.ax, y: FIG.ay, tau: FIG.atau, k: FIG.ak },
            B: { x: FIG.bx, y: FIG.by, tau: FIG.btau, k: FIG.bk },
        }));
        const outPath = join(dir, 'family.json');
        execFileSync('python3', ['-m', 'spiralinv', 'family',
            '--input', problemPath, '--samples', '64',
            '--out', outPath], { timeout: 60000 });
        const doc = JSON.parse(readFileSync(outPath, 'utf-8'));
        const exported = JSON.parse(res.raw);
        const match = doc.solutions.find((s) => Math.abs(s.theta_deg - exported.theta_deg) < 1e-12 &&
            s.root === exported.root);
        assert.ok(match, 'CLI family output contains the exported member');
        assert.deepEqual(match.samples, exported.samples);
        assert.deepEqual(match, exported);
    }
    finally {
        rmSync(dir, { recursive: true, force: true });
    }
});
test('rejected scrub positions surface the server disposition', { skip: !HAVE_KERNEL }, async () => {
    const fetcher = new MemberFetcher(base);
    await assert.rejects(fetcher.fetch(FIG, 60, 2, 16), (err) => /non_spiral/.test(err.message));
});
test('gate data reports the gate through /solve', { skip: !HAVE_KERNEL }, async () => {
    await assert.rejects(solveProblem(base, { ...FIG, atau: 30, ak: 0.5, btau: 30, bk: 0.5 }), (err) => err.code === 'NoSpiralExists');
});
