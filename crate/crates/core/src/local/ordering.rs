use std::cmp::Ordering;

use serde::Serialize;

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingKind {
    /// Lower total degree first, ties broken reverse-lexicographically.
    NegDegRevLex,
    /// Lower total degree first, ties broken lexicographically.
    NegDegLex,
}

/// A local monomial ordering: `1` is the largest monomial and every
/// variable is smaller than `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalOrdering {
    kind: OrderingKind,
    /// Variable indices in priority order; empty means the identity.
    priority: Vec<usize>,
}

impl Default for LocalOrdering {
    fn default() -> Self {
        Self::neg_deg_revlex()
    }
}

impl LocalOrdering {
    pub fn neg_deg_revlex() -> Self {
        LocalOrdering { kind: OrderingKind::NegDegRevLex, priority: Vec::new() }
    }

    pub fn neg_deg_lex() -> Self {
        LocalOrdering { kind: OrderingKind::NegDegLex, priority: Vec::new() }
    }

    /// Reorders variable priority. `perm` must be a permutation of `0..n`.
    pub fn with_priority(mut self, perm: Vec<usize>) -> Self {
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().enumerate().all(|(i, &v)| i == v), "priority must be a permutation");
        self.priority = perm;
        self
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    fn exp(&self, m: &Monomial, i: usize) -> u32 {
        if self.priority.is_empty() {
            m.exps()[i]
        } else {
            m.exps()[self.priority[i]]
        }
    }

    /// `Greater` means `a` is the larger (more leading) monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match b.degree().cmp(&a.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = a.nvars();
        match self.kind {
            OrderingKind::NegDegLex => {
                for i in 0..n {
                    match self.exp(a, i).cmp(&self.exp(b, i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderingKind::NegDegRevLex => {
                for i in (0..n).rev() {
                    match self.exp(b, i).cmp(&self.exp(a, i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn constants_dominate() {
        for ord in [LocalOrdering::neg_deg_revlex(), LocalOrdering::neg_deg_lex()] {
            assert_eq!(ord.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
            assert_eq!(ord.cmp(&m(&[0, 1]), &m(&[0, 2])), Ordering::Greater);
            assert_eq!(ord.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Less);
        }
    }

    #[test]
    fn tie_breaks() {
        let ds = LocalOrdering::neg_deg_revlex();
        let dl = LocalOrdering::neg_deg_lex();
        // x > y in both
        assert_eq!(ds.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(dl.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // x^2 z^0 vs y^2 in 3 vars: revlex and lex both say x^2 > y^2
        // but x*z vs y^2 differ: lex gives x*z > y^2, revlex gives y^2 > x*z.
        assert_eq!(dl.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(ds.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn priority_permutes_variables() {
        let ord = LocalOrdering::neg_deg_lex().with_priority(vec![1, 0]);
        assert_eq!(ord.cmp(&m(&[0, 1]), &m(&[1, 0])), Ordering::Greater);
    }
}
