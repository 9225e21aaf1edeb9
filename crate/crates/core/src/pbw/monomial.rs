//! Standard monomials `x^alpha = x_1^{alpha_1} .. x_n^{alpha_n}` and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a standard monomial. The derived `Ord` is plain
/// lexicographic order on the vector and is used only for storage; the
/// mathematical order lives in [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(alpha: Vec<u32>) -> Self {
        Monomial(alpha)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i] = 1;
        Monomial(a)
    }

    pub fn alpha(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum; the product in the associated graded ring.
    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn bump(&self, i: usize, by: i64) -> Monomial {
        let mut a = self.0.clone();
        a[i] = (a[i] as i64 + by) as u32;
        Monomial(a)
    }

    /// Index of the first variable with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Renders with the given variable names, `"1"` for the empty monomial.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[default]
    Deglex,
    Lex,
    Degrevlex,
}

/// A monomial order. `precedence` lists variable indices from least to most
/// significant; the default is `x_1 < x_2 < .. < x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; precedence.len()];
        for &p in &precedence {
            if p >= seen.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(MonomialOrder { kind, precedence })
    }

    pub fn standard(kind: OrderKind, n: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (0..n).collect(),
        }
    }

    pub fn deglex(n: usize) -> Self {
        Self::standard(OrderKind::Deglex, n)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn is_degree_compatible(&self) -> bool {
        self.kind != OrderKind::Lex
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.alpha(), b.alpha());
        let lex = || {
            for &v in self.precedence.iter().rev() {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        };
        let deg = || a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>());
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Deglex => deg().then_with(lex),
            OrderKind::Degrevlex => deg().then_with(|| {
                for &v in &self.precedence {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}
