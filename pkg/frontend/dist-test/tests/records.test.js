import assert from 'node:assert/strict';
import { test } from 'node:test';
import { exportFilename, isSolutionRecord, memberSvg } from '../src/records.js';
import { sampleRecord } from './fixtures.js';
test('record guard accepts server records and rejects malformed ones', () => {
    assert.equal(isSolutionRecord(sampleRecord(0)), true);
    assert.equal(isSolutionRecord(sampleRecord(-17.97, 3)), true);
    assert.equal(isSolutionRecord(null), false);
    assert.equal(isSolutionRecord({ schema: 'other/1' }), false);
    const broken = { ...sampleRecord(0), samples: { t: [0], x: ['a'] } };
    assert.equal(isSolutionRecord(broken), false);
});
test('export filenames encode degree, theta and root', () => {
    assert.equal(exportFilename(sampleRecord(-17.97, 3), 'json'), 'spiral-deg3-thetam17p97-root2.json');
    assert.equal(exportFilename(sampleRecord(4, 4), 'svg'), 'spiral-deg4-theta4p00-root2.svg');
});
test('member SVG carries both panels with one point per sample', () => {
    const rec = sampleRecord(12);
    const svg = memberSvg(rec);
    assert.match(svg, /^<svg xmlns="http:\/\/www\.w3\.org\/2000\/svg"/);
    const curve = svg.match(/class="curve"[^>]*points="([^"]+)"/);
    const plot = svg.match(/class="curvature-plot"[^>]*points="([^"]+)"/);
    assert.ok(curve && plot);
    assert.equal(curve[1].split(' ').length, rec.samples.t.length);
    assert.equal(plot[1].split(' ').length, rec.samples.t.length);
});
test('member SVG mentions T for cubic records', () => {
    const svg = memberSvg(sampleRecord(-17.97, 3));
    assert.match(svg, /degree 3/);
    assert.match(svg, /T -0\.06000/);
    const svg4 = memberSvg(sampleRecord(0, 4));
    assert.doesNotMatch(svg4, /, T /);
});
