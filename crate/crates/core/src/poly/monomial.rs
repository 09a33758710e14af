use std::cmp::Ordering;
use std::fmt;

/// Exponent vector over a fixed number of ambient variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars].into_boxed_slice())
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents.into_boxed_slice())
    }

    pub fn variable(index: usize, num_vars: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `None` when an exponent would overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Box<[u32]>>>()
            .map(Self)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Box<[u32]>>>()
            .map(Self)
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, rhs: &Self) -> bool {
        self.0.iter().zip(rhs.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Renders as `x^2*y`, or `1` for the unit monomial.
    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = names[i].as_ref();
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.num_vars())))
    }
}

/// `x1, x2, ...`
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order: lexicographic or graded reverse lexicographic, with an
/// explicit variable priority. `priority[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Panics unless `priority` is a permutation of `0..priority.len()`.
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            assert!(i < priority.len() && !seen[i], "variable priority must be a permutation");
            seen[i] = true;
        }
        Self { kind, priority }
    }

    /// Lex with variables in declaration order (`x1 > x2 > ...`).
    pub fn lex(num_vars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..num_vars).collect())
    }

    /// Grevlex with variables in declaration order.
    pub fn grevlex(num_vars: usize) -> Self {
        Self::new(OrderKind::GrevLex, (0..num_vars).collect())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in self.priority.iter().rev() {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
