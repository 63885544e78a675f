//! Finite-difference stencils (Fornberg's algorithm) and their application along
//! either axis of a field.

use crate::field::RealField;

/// Weights `c[d][i]` approximating the `d`-th derivative at `x0` from samples at `x[i]`,
/// for every `d ≤ max_order`.
pub fn fornberg_weights(x0: f64, x: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = x[0] - x0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - x0;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// Centred stencil of fourth-order accuracy for the `order`-th derivative on a unit
/// spacing; returned as (half-width, weights).
pub fn central_stencil(order: usize) -> (usize, Vec<f64>) {
    let half = (order + 1) / 2 + 1;
    let xs: Vec<f64> = (-(half as i64)..=half as i64).map(|i| i as f64).collect();
    let w = fornberg_weights(0.0, &xs, order);
    (half, w[order].clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Z,
    P,
}

/// `∂^order W` along `dir`; samples outside the grid count as zero.
pub fn derivative(w: &RealField, dir: Direction, order: usize) -> Vec<f64> {
    let g = w.grid();
    let (nz, np) = (g.z.len(), g.p.len());
    if order == 0 {
        return w.values().to_vec();
    }
    let (half, weights) = central_stencil(order);
    let h = match dir {
        Direction::Z => g.z.step(),
        Direction::P => g.p.step(),
    };
    let scale = h.powi(-(order as i32));
    let mut out = vec![0.0; nz * np];
    for j in 0..nz {
        for m in 0..np {
            let mut acc = 0.0;
            for (s, wt) in weights.iter().enumerate() {
                let off = s as i64 - half as i64;
                let (jj, mm) = match dir {
                    Direction::Z => (j as i64 + off, m as i64),
                    Direction::P => (j as i64, m as i64 + off),
                };
                if jj >= 0 && mm >= 0 && (jj as usize) < nz && (mm as usize) < np {
                    acc += wt * w.get(jj as usize, mm as usize);
                }
            }
            out[j * np + m] = acc * scale;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_stencils() {
        let (h, w) = central_stencil(1);
        assert_eq!(h, 2);
        let want = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        for (a, b) in w.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
        let (_, w) = central_stencil(2);
        let want = [-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0];
        for (a, b) in w.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn stencils_are_exact_on_polynomials() {
        for order in 1..=6 {
            let (half, w) = central_stencil(order);
            // exact for x^order, and kills lower powers
            for pw in 0..=order {
                let s: f64 = w
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * ((i as f64 - half as f64) + 0.3).powi(pw as i32))
                    .sum();
                let want = if pw == order { (1..=order).product::<usize>() as f64 } else { 0.0 };
                assert!((s - want).abs() < 1e-8 * want.max(1.0), "order {order}, power {pw}: {s}");
            }
        }
    }
}
