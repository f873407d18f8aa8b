// Copyright 2026 the infillgp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Adaptive Gauss-Kronrod (7-15) quadrature, QUADPACK-style error rescaling.
//! Deterministic: the bisection order depends only on the inputs.

/// Kronrod abscissae (positive half, descending), 15-point rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_7,
    0.949_107_912_342_758_524_526_189_7,
    0.864_864_423_359_769_072_789_712_8,
    0.741_531_185_599_394_439_863_864_8,
    0.586_087_235_467_691_130_294_144_8,
    0.405_845_151_377_397_166_906_606_4,
    0.207_784_955_007_898_467_600_689_4,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_0,
    0.063_092_092_629_978_553_290_700_7,
    0.104_790_010_322_250_183_839_876_3,
    0.140_653_259_715_525_918_745_189_6,
    0.169_004_726_639_267_902_826_583_4,
    0.190_350_578_064_785_409_913_256_4,
    0.204_432_940_075_298_892_414_161_9,
    0.209_482_141_084_727_828_012_999_2,
];

/// 7-point Gauss weights for the even-indexed abscissae of `XGK`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_4,
    0.279_705_391_489_276_667_901_467_7,
    0.381_830_050_505_118_944_950_369_8,
    0.417_959_183_673_469_387_755_102_0,
];

#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadResult {
    pub value: f64,
    pub est_error: f64,
    pub converged: bool,
}

/// One 15-point Kronrod panel; returns (integral, error estimate).
pub(crate) fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut fv = [0.0_f64; 15];
    fv[7] = fc;
    let mut res_k = WGK[7] * fc;
    let mut res_g = WG[3] * fc;
    let mut res_abs = res_k.abs();
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> (f64, f64, bool) {
    let (v, e) = gk15(f, a, b);
    if e <= tol || depth == 0 {
        return (v, e, e <= tol);
    }
    let m = 0.5 * (a + b);
    let (vl, el, cl) = adapt(f, a, m, 0.5 * tol, depth - 1);
    let (vr, er, cr) = adapt(f, m, b, 0.5 * tol, depth - 1);
    (vl + vr, el + er, cl && cr)
}

/// Adaptive integration of `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub(crate) fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_depth: u32,
) -> QuadResult {
    let (value, est_error, converged) = adapt(f, a, b, abs_tol, max_depth);
    QuadResult {
        value,
        est_error,
        converged,
    }
}

/// Adaptive integration over consecutive panels `[pts[0], pts[1], ...]`; the
/// tolerance is split evenly across panels.
pub(crate) fn adaptive_panels<F: Fn(f64) -> f64>(
    f: &F,
    pts: &[f64],
    abs_tol: f64,
    max_depth: u32,
) -> QuadResult {
    let npanel = pts.len().saturating_sub(1).max(1);
    let per = abs_tol / npanel as f64;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut ok = true;
    for w in pts.windows(2) {
        let r = adaptive(f, w[0], w[1], per, max_depth);
        value += r.value;
        err += r.est_error;
        ok &= r.converged;
    }
    QuadResult {
        value,
        est_error: err,
        converged: ok,
    }
}
