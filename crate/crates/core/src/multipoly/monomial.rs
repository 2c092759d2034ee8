use core::cmp::Ordering;
use core::fmt;

/// Widest ring supported; the 32-variable ring of the full system fits.
pub const MAX_VARS: usize = 32;

/// Dense exponent vector with cached total degree and support mask.
///
/// Unused trailing slots are always zero, so comparisons and divisibility
/// tests never need to know the ring width.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    mask: u32,
}

/// The natural ordering is degrevlex, used for map keys and storage.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_degrevlex(self.deg, &self.exps, other.deg, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0, mask: 0 }
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let mut m = Self::one();
        m.exps[i] = e;
        m.deg = u32::from(e);
        m.mask = if e > 0 { 1 << i } else { 0 };
        m
    }

    /// Builds from a slice of exponents (length at most `MAX_VARS`).
    pub fn from_exps(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).ok()?;
        }
        m.refresh();
        Some(m)
    }

    fn refresh(&mut self) {
        self.deg = self.exps.iter().map(|&e| u32::from(e)).sum();
        self.mask = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i));
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        u32::from(self.exps[i])
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Self {
        let mut m = *self;
        m.exps[i] = e;
        m.refresh();
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m.deg = self.deg + other.deg;
        m.mask = self.mask | other.mask;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.refresh();
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.refresh();
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
        }
        m.refresh();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "Monomial{:?}", &self.exps[..last])
    }
}

/// Monomial orders over a fixed variable indexing (index 0 is the largest
/// variable).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Lex on the first `k` variables, ties broken by degrevlex on the rest.
    /// Eliminates the first block.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => cmp_lex(&a.exps, &b.exps),
            MonomialOrder::DegRevLex => cmp_degrevlex(a.deg, &a.exps, b.deg, &b.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(MAX_VARS);
                cmp_lex(&a.exps[..k], &b.exps[..k]).then_with(|| {
                    let da: u32 = a.exps[k..].iter().map(|&e| u32::from(e)).sum();
                    let db: u32 = b.exps[k..].iter().map(|&e| u32::from(e)).sum();
                    cmp_degrevlex(da, &a.exps[k..], db, &b.exps[k..])
                })
            }
        }
    }

    /// Whether higher total degree always means larger.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex(da: u32, a: &[u16], db: u32, b: &[u16]) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e).unwrap()
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert_eq!(a.gcd(&m(&[0, 3, 1])), m(&[0, 2, 0]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
        assert_eq!(b.degree(), 5);
    }

    #[test]
    fn orders() {
        use MonomialOrder::*;
        // x > y > z
        let x = m(&[1, 0, 0]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(Lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(DegRevLex.cmp(&x, &y2), Ordering::Less);
        // degrevlex: x*z < y^2 (same degree, smaller power of last variable wins)
        assert_eq!(DegRevLex.cmp(&m(&[1, 0, 1]), &y2), Ordering::Less);
        assert_eq!(DegRevLex.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        // block(1): x dominates any power of y,z
        assert_eq!(Block(1).cmp(&x, &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(Block(1).cmp(&m(&[0, 1, 1]), &m(&[0, 0, 3])), Ordering::Less);
        assert!(DegRevLex.is_graded() && !Lex.is_graded());
    }
}
