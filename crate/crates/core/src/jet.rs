//! Box-truncated multivariate Taylor polynomials.
//!
//! A [`Jet`] holds the Taylor coefficients of a function of `t = (t_1..t_n)`
//! for all exponents `e` with `e_j ≤ orders[j]`. Products and compositions
//! with univariate analytic functions stay exact inside that box, because a
//! coefficient only ever depends on coefficients with smaller exponents.
//! The closed-form maps use jets to produce exact derivatives of any order.

use num_complex::Complex64;

#[derive(Clone, Debug)]
pub(crate) struct Jet {
    orders: Vec<usize>,
    coeffs: Vec<Complex64>,
}

impl Jet {
    pub fn constant(orders: &[usize], value: Complex64) -> Self {
        let size = orders.iter().map(|o| o + 1).product();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); size];
        coeffs[0] = value;
        Self {
            orders: orders.to_vec(),
            coeffs,
        }
    }

    /// Embeds a one-variable series in `t_var`. Terms beyond the box are
    /// dropped; missing terms are zero.
    pub fn univariate(orders: &[usize], var: usize, series: &[Complex64]) -> Self {
        let mut jet = Self::constant(orders, Complex64::new(0.0, 0.0));
        let stride = jet.stride(var);
        for (p, &c) in series.iter().enumerate().take(orders[var] + 1) {
            jet.coeffs[p * stride] = c;
        }
        jet
    }

    fn stride(&self, var: usize) -> usize {
        self.orders[var + 1..].iter().map(|o| o + 1).product()
    }

    fn decode(&self, mut flat: usize, out: &mut [usize]) {
        for j in (0..self.orders.len()).rev() {
            let radix = self.orders[j] + 1;
            out[j] = flat % radix;
            flat /= radix;
        }
    }

    fn encode(&self, exps: &[usize]) -> Option<usize> {
        let mut flat = 0;
        for (j, &e) in exps.iter().enumerate() {
            if e > self.orders[j] {
                return None;
            }
            flat = flat * (self.orders[j] + 1) + e;
        }
        Some(flat)
    }

    pub fn value(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Coefficient of `t^e`; zero outside the box.
    pub fn coeff(&self, exps: &[u32]) -> Complex64 {
        let exps: Vec<usize> = exps.iter().map(|&e| e as usize).collect();
        self.encode(&exps)
            .map_or(Complex64::new(0.0, 0.0), |i| self.coeffs[i])
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        debug_assert_eq!(self.orders, other.orders);
        let n = self.orders.len();
        let mut out = Jet::constant(&self.orders, Complex64::new(0.0, 0.0));
        let mut ea = vec![0; n];
        let mut eb = vec![0; n];
        let mut sum = vec![0; n];
        for (ia, &ca) in self.coeffs.iter().enumerate() {
            if ca == Complex64::new(0.0, 0.0) {
                continue;
            }
            self.decode(ia, &mut ea);
            for (ib, &cb) in other.coeffs.iter().enumerate() {
                if cb == Complex64::new(0.0, 0.0) {
                    continue;
                }
                other.decode(ib, &mut eb);
                for j in 0..n {
                    sum[j] = ea[j] + eb[j];
                }
                if let Some(i) = out.encode(&sum) {
                    out.coeffs[i] += ca * cb;
                }
            }
        }
        out
    }

    /// `Σ_m taylor[m] (self - self(0))^m`, i.e. composition with a
    /// univariate function whose Taylor coefficients at `self(0)` are given.
    /// Powers beyond the total order of the box vanish and are skipped.
    pub fn compose(&self, taylor: &[Complex64]) -> Jet {
        let total: usize = self.orders.iter().sum();
        let mut delta = self.clone();
        delta.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut out = Jet::constant(&self.orders, taylor.first().copied().unwrap_or_default());
        let mut power = Jet::constant(&self.orders, Complex64::new(1.0, 0.0));
        for &c in taylor.iter().skip(1).take(total) {
            power = power.mul(&delta);
            for (o, p) in out.coeffs.iter_mut().zip(&power.coeffs) {
                *o += c * p;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn product_of_univariates_is_tensor() {
        let orders = [2, 2];
        let x = Jet::univariate(&orders, 0, &[c(1.0), c(2.0), c(3.0)]);
        let y = Jet::univariate(&orders, 1, &[c(4.0), c(5.0)]);
        let p = x.mul(&y);
        assert_eq!(p.coeff(&[0, 0]), c(4.0));
        assert_eq!(p.coeff(&[1, 1]), c(10.0));
        assert_eq!(p.coeff(&[2, 1]), c(15.0));
        assert_eq!(p.coeff(&[2, 2]), c(0.0));
    }

    #[test]
    fn compose_exp_matches_series() {
        // exp(t) with t univariate; Taylor of exp at 0 is 1/m!.
        let orders = [6];
        let t = Jet::univariate(&orders, 0, &[c(0.0), c(1.0)]);
        let taylor: Vec<_> = (0..=6)
            .map(|m| c(1.0 / (1..=m).map(|i| i as f64).product::<f64>()))
            .collect();
        let e = t.compose(&taylor);
        for m in 0..=6u32 {
            let expect = 1.0 / (1..=m).map(f64::from).product::<f64>();
            assert!((e.coeff(&[m]).re - expect).abs() < 1e-15);
        }
    }
}
