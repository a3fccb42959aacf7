//! Bivariate polynomials represented recursively: a polynomial in y whose
//! coefficients are polynomials in x. Elimination happens through the
//! Sylvester resultant (determinant convention: standard Sylvester matrix,
//! rows of the first argument on top).

use crate::field::Field;
use crate::poly::Polynomial;
use crate::ratfn::RatFn;

#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<F: Field> {
    /// coeff of y^i is coeffs[i], a polynomial in x
    coeffs: Vec<Polynomial<F>>,
}

impl<F: Field> BiPoly<F> {
    pub fn new(coeffs: Vec<Polynomial<F>>) -> Self {
        let mut p = BiPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn from_x_poly(p: Polynomial<F>) -> Self {
        BiPoly::new(vec![p])
    }

    /// y as a bivariate polynomial, given a witness element.
    pub fn y(witness: &F) -> Self {
        BiPoly::new(vec![
            Polynomial::zero(),
            Polynomial::constant(witness.one_like()),
        ])
    }

    pub fn x(witness: &F) -> Self {
        BiPoly::new(vec![Polynomial::var(witness)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Polynomial<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        BiPoly::new(out)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Polynomial::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    pub fn scale(&self, c: &Polynomial<F>) -> Self {
        BiPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32, witness: &F) -> Self {
        let mut acc = BiPoly::from_x_poly(Polynomial::constant(witness.one_like()));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute a polynomial in x for y.
    pub fn eval_y(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(p).add(c);
        }
        acc
    }

    /// Substitute a constant for y.
    pub fn eval_y_const(&self, v: &F) -> Polynomial<F> {
        self.eval_y(&Polynomial::constant(v.clone()))
    }

    /// Substitute a constant for x, producing a polynomial in y.
    pub fn eval_x_const(&self, v: &F) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| c.eval(v)).collect())
    }

    pub fn swap_vars(&self) -> Self {
        let dx = match self.degree_x() {
            None => return BiPoly::zero(),
            Some(d) => d,
        };
        let mut rows = Vec::with_capacity(dx + 1);
        for i in 0..=dx {
            let coeffs: Vec<F> = self
                .coeffs
                .iter()
                .map(|c| {
                    c.coeff(i)
                        .cloned()
                        .unwrap_or_else(|| self.witness().zero_like())
                })
                .collect();
            rows.push(Polynomial::new(coeffs));
        }
        BiPoly::new(rows)
    }

    fn witness(&self) -> F {
        self.coeffs
            .iter()
            .find_map(|c| c.coeffs().first())
            .expect("nonzero polynomial")
            .clone()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> BiPoly<G> {
        BiPoly::new(self.coeffs.iter().map(|c| c.map(f)).collect())
    }

    /// View as a univariate polynomial in y over the fraction field F(x).
    pub fn to_y_over_fractions(&self) -> Polynomial<RatFn<F>> {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        RatFn::constant(self.witness().zero_like())
                    } else {
                        RatFn::from_poly(c.clone())
                    }
                })
                .collect(),
        )
    }

    /// gcd in F[x][y], returned primitive in x with monic-in-F leading
    /// x-coefficient of the leading y-coefficient.
    pub fn gcd_y(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a = self.to_y_over_fractions();
        let b = other.to_y_over_fractions();
        let g = a.gcd(&b);
        // clear denominators: multiply by the product of denominators
        let mut clear = Polynomial::constant(self.witness().one_like());
        for c in g.coeffs() {
            clear = clear_lcm(&clear, c.den());
        }
        let rows: Vec<Polynomial<F>> = g
            .coeffs()
            .iter()
            .map(|c| c.num().mul(&clear.divmod(c.den()).0))
            .collect();
        let mut out = BiPoly::new(rows);
        // remove the x-content
        let mut content = Polynomial::zero();
        for c in &out.coeffs {
            content = content.gcd(c);
        }
        if let Some(d) = content.degree() {
            if d > 0 {
                out = BiPoly::new(
                    out.coeffs.iter().map(|c| c.divmod(&content).0).collect(),
                );
            }
        }
        // normalize leading coefficient
        if let Some(lead) = out.coeffs.last() {
            if let Some(lc) = lead.leading() {
                let inv = lc.inv().expect("nonzero leading coefficient");
                out = BiPoly::new(
                    out.coeffs.iter().map(|c| c.scale(&inv)).collect(),
                );
            }
        }
        out
    }

    /// Total evaluation (x, y) -> F.
    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(y).add(&c.eval(x));
        }
        acc
    }
}

fn clear_lcm<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let g = a.gcd(b);
    a.mul(&b.divmod(&g).0)
}

/// Sylvester resultant eliminating y: Res_y(A, B) as a polynomial in x.
/// Sign convention: determinant of the Sylvester matrix with A's
/// coefficient rows first.
pub fn resultant_y<F: Field>(a: &BiPoly<F>, b: &BiPoly<F>) -> Polynomial<F> {
    let m = a.degree_y().expect("nonzero polynomial A");
    let n = b.degree_y().expect("nonzero polynomial B");
    if m == 0 && n == 0 {
        return Polynomial::constant(a.witness().one_like());
    }
    // deg-0 cases: Res(A, B) = A^n (when deg A = 0) etc.
    if m == 0 {
        return a.coeffs()[0].pow(n as u32);
    }
    if n == 0 {
        return b.coeffs()[0].pow(m as u32);
    }
    let size = m + n;
    let zero = Polynomial::zero();
    let mut mat: Vec<Vec<Polynomial<F>>> = vec![vec![zero; size]; size];
    // A rows: n shifted copies, descending coefficients
    for r in 0..n {
        for (k, c) in a.coeffs().iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.coeffs().iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    determinant_fraction_free(mat, &a.witness())
}

/// Bareiss fraction-free determinant over F[x].
fn determinant_fraction_free<F: Field>(
    mut mat: Vec<Vec<Polynomial<F>>>,
    witness: &F,
) -> Polynomial<F> {
    let n = mat.len();
    if n == 0 {
        return Polynomial::constant(witness.one_like());
    }
    let mut sign = false;
    let mut prev = Polynomial::constant(witness.one_like());
    for k in 0..n - 1 {
        // pivot selection
        if mat[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !mat[r][k].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(k, r);
                    sign = !sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k]
                    .mul(&mat[i][j])
                    .sub(&mat[i][k].mul(&mat[k][j]));
                let (q, r) = num.divmod(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][k] = Polynomial::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        BigRational::from_integer(n.into())
    }

    fn xp(v: &[i64]) -> Polynomial<Q> {
        Polynomial::new(v.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn resultant_linear_pair() {
        // Res_y(y - x, y - 2x): det [[1,-x],[1,-2x]] = -x
        let a = BiPoly::new(vec![xp(&[0, -1]), xp(&[1])]);
        let b = BiPoly::new(vec![xp(&[0, -2]), xp(&[1])]);
        let r = resultant_y(&a, &b);
        assert_eq!(r, xp(&[0, -1]));
    }

    #[test]
    fn resultant_with_y_squared() {
        // Res_y(y^2 - x, y): Sylvester det = -(-x) ... fixed convention gives -x
        let a = BiPoly::new(vec![xp(&[0, -1]), xp(&[]), xp(&[1])]);
        let b = BiPoly::new(vec![xp(&[]), xp(&[1])]);
        let r = resultant_y(&a, &b);
        // matrix [[1,0,-x],[1,0],[0,1,0]] ordering: check against direct
        // expansion Res(y^2-x, y) = (-x) * 1^2? Classic: Res(f,g) with g=y
        // equals f(0) = -x.
        assert_eq!(r, xp(&[0, -1]));
    }

    #[test]
    fn resultant_substitution() {
        // Res_y(x^2 + y^2, x - y) = 2x^2
        let a = BiPoly::new(vec![xp(&[0, 0, 1]), xp(&[]), xp(&[1])]);
        let b = BiPoly::new(vec![xp(&[0, 1]), xp(&[-1])]);
        let r = resultant_y(&a, &b);
        assert_eq!(r, xp(&[0, 0, 2]));
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        // A = y - x^2, B = y - 4: common root at x = ±2
        let a = BiPoly::new(vec![xp(&[0, 0, -1]), xp(&[1])]);
        let b = BiPoly::new(vec![xp(&[-4]), xp(&[1])]);
        let r = resultant_y(&a, &b);
        assert_eq!(r.eval(&q(2)), q(0));
        assert_eq!(r.eval(&q(-2)), q(0));
        assert!(r.eval(&q(1)) != q(0));
    }

    #[test]
    fn bivariate_gcd() {
        // (x+y)(x-y) and (x+y)(x^2+1) share x+y
        let sum = BiPoly::new(vec![xp(&[0, 1]), xp(&[1])]);
        let dif = BiPoly::new(vec![xp(&[0, 1]), xp(&[-1])]);
        let f = sum.mul(&dif);
        let g = sum.mul(&BiPoly::from_x_poly(xp(&[1, 0, 1])));
        let d = f.gcd_y(&g);
        assert_eq!(d, sum);
    }

    #[test]
    fn swap_vars_roundtrip() {
        let f = BiPoly::new(vec![xp(&[1, 2, 3]), xp(&[0, 4]), xp(&[5])]);
        assert_eq!(f.swap_vars().swap_vars(), f);
        // eval consistency
        assert_eq!(f.eval(&q(2), &q(3)), f.swap_vars().eval(&q(3), &q(2)));
    }
}
