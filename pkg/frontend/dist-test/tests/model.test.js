import assert from 'node:assert/strict';
import { test } from 'node:test';
import { canExport, clampThetaIndex, currentKey, initialState, isNormalizedPosition, scrubTo, selectCubic, spiralKindBadge, toggleOverlay, withCubics, withGateError, withMember, withProblem, withRejection, withStaleData, } from '../src/model.js';
import { sampleFamily, sampleInvariants, sampleProblem, sampleRecord } from './fixtures.js';
test('withProblem builds a sorted theta index and starts nearest zero', () => {
    const st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([10, -20, 0, 20, -10]));
    // rejected grid positions are kept so the slider spans the full range
    assert.deepEqual(st.thetaList.map((k) => k.thetaDeg), [-20, -10, 0, 10, 20, 40]);
    assert.deepEqual(st.thetaList.map((k) => k.accepted), [true, true, true, true, true, false]);
    assert.equal(st.thetaList[st.thetaIndex].thetaDeg, 0);
    assert.equal(st.thetaList[st.thetaIndex].accepted, true);
    assert.equal(st.rejected.length, 1);
    assert.equal(st.gateMessage, null);
});
test('slider lands on rejected positions with their dispositions', () => {
    const st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([0]));
    const scrubbed = scrubTo(st, st.thetaList.length - 1);
    const key = currentKey(scrubbed);
    assert.equal(key.accepted, false);
    assert.equal(key.status, 'non_spiral');
});
test('slider positions clamp to the fetched index', () => {
    const st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([-6, -2, 0, 2, 6]));
    assert.equal(clampThetaIndex(st, -3), 0);
    assert.equal(clampThetaIndex(st, 99), st.thetaList.length - 1);
    const scrubbed = scrubTo(st, 99);
    assert.equal(scrubbed.thetaIndex, st.thetaList.length - 1);
    // the invariant: current theta always within the fetched range
    const inv = st.invariants;
    const key = currentKey(scrubbed);
    assert.ok(Math.abs(key.thetaDeg) <= inv.theta_range.Theta_deg);
});
test('rejected members never stay displayed', () => {
    let st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([0]));
    st = withMember(st, sampleRecord(0), '{}');
    assert.ok(st.selected);
    st = withRejection(st, 'discontinuous (interpolant passes through infinity)');
    assert.equal(st.selected, null);
    assert.equal(st.selectedRaw, null);
    assert.match(st.rejection, /discontinuous/);
    assert.equal(canExport(st), false);
});
test('member arrival clears stale flags and enables export', () => {
    let st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([0]));
    st = withStaleData(st);
    assert.equal(st.staleData, true);
    st = withMember(st, sampleRecord(0), 'raw-body');
    assert.equal(st.staleData, false);
    assert.equal(st.selectedRaw, 'raw-body');
    assert.equal(canExport(st), true);
});
test('gate errors reset the model but keep overlay preferences', () => {
    let st = initialState();
    st = toggleOverlay(st, 'circles');
    st = withProblem(st, sampleProblem(), sampleInvariants(), sampleFamily([0]));
    assert.equal(st.overlays.circles, true);
    st = withGateError(st, 'NoSpiralExists: Q >= 0');
    assert.equal(st.invariants, null);
    assert.equal(st.overlays.circles, true);
    assert.match(st.gateMessage, /NoSpiralExists/);
});
test('cubic selection displays the cubic record and its raw export text', () => {
    let st = withProblem(initialState(), sampleProblem(), sampleInvariants(), sampleFamily([0]));
    const cubic = sampleRecord(-17.97, 3);
    st = withCubics(st, [cubic]);
    st = selectCubic(st, 0);
    assert.equal(st.selected.degree, 3);
    assert.equal(st.selected.T, -0.06);
    const exported = JSON.parse(st.selectedRaw);
    assert.equal(exported.T, -0.06); // cubic export includes T
    assert.equal(selectCubic(st, 5), st); // out of range: no change
});
test('overlays default off and toggle independently', () => {
    let st = initialState();
    assert.deepEqual(st.overlays, { circles: false, polygon: false, conic: false });
    st = toggleOverlay(st, 'conic');
    assert.deepEqual(st.overlays, { circles: false, polygon: false, conic: true });
});
test('badges and normalized-position detection', () => {
    assert.equal(spiralKindBadge(sampleInvariants()), 'long spiral');
    assert.equal(isNormalizedPosition(sampleProblem()), true);
    assert.equal(isNormalizedPosition({ ...sampleProblem(), ax: 0 }), false);
});
