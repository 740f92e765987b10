//! Torsion class labels: Gray-Hervella components in dimension 6 and
//! Fernández-Gray components in dimension 7.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Chi1,
    Chi1Bar,
    Chi2,
    Chi2Bar,
    Chi3,
    Chi4,
    Chi5,
    W1,
    W2,
    W3,
    W4,
}

impl Component {
    pub const SU3: [Component; 7] = [
        Component::Chi1,
        Component::Chi1Bar,
        Component::Chi2,
        Component::Chi2Bar,
        Component::Chi3,
        Component::Chi4,
        Component::Chi5,
    ];
    pub const G2: [Component; 4] = [Component::W1, Component::W2, Component::W3, Component::W4];

    pub const fn bit(self) -> u16 {
        1 << self as u16
    }

    pub fn token(self) -> &'static str {
        match self {
            Component::Chi1 => "chi1",
            Component::Chi1Bar => "chi1bar",
            Component::Chi2 => "chi2",
            Component::Chi2Bar => "chi2bar",
            Component::Chi3 => "chi3",
            Component::Chi4 => "chi4",
            Component::Chi5 => "chi5",
            Component::W1 => "W1",
            Component::W2 => "W2",
            Component::W3 => "W3",
            Component::W4 => "W4",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        Component::SU3
            .into_iter()
            .chain(Component::G2)
            .find(|c| c.token() == token)
            .ok_or_else(|| Error::Invalid(alloc::format!("unknown class token {token:?}")))
    }

    /// Subscript as printed in a label, e.g. `₁̄` for `Chi1Bar`.
    fn subscript(self) -> &'static str {
        match self {
            Component::Chi1 | Component::W1 => "₁",
            Component::Chi1Bar => "₁\u{304}",
            Component::Chi2 | Component::W2 => "₂",
            Component::Chi2Bar => "₂\u{304}",
            Component::Chi3 | Component::W3 => "₃",
            Component::Chi4 | Component::W4 => "₄",
            Component::Chi5 => "₅",
        }
    }

    pub fn is_su3(self) -> bool {
        (self as u16) < Component::W1 as u16
    }

    /// Dimension of the irreducible module.
    pub fn module_dim(self) -> usize {
        match self {
            Component::Chi1 | Component::Chi1Bar | Component::W1 => 1,
            Component::Chi2 | Component::Chi2Bar => 8,
            Component::Chi3 => 12,
            Component::Chi4 | Component::Chi5 => 6,
            Component::W4 => 7,
            Component::W2 => 14,
            Component::W3 => 27,
        }
    }
}

/// A set of torsion components. Empty means torsion-free.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSet(u16);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);

    pub const fn of(components: &[Component]) -> Self {
        let mut bits = 0;
        let mut i = 0;
        while i < components.len() {
            bits |= components[i].bit();
            i += 1;
        }
        ClassSet(bits)
    }

    pub fn insert(&mut self, c: Component) {
        self.0 |= c.bit();
    }

    pub fn contains(self, c: Component) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ClassSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ClassSet) -> ClassSet {
        ClassSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ClassSet) -> ClassSet {
        ClassSet(self.0 & other.0)
    }

    pub fn components(self) -> impl Iterator<Item = Component> {
        Component::SU3
            .into_iter()
            .chain(Component::G2)
            .filter(move |c| self.contains(*c))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// ASCII tokens in canonical (and lexicographic) order.
    pub fn tokens(self) -> Vec<&'static str> {
        self.components().map(Component::token).collect()
    }

    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let mut set = ClassSet::EMPTY;
        for t in tokens {
            set.insert(Component::from_token(t.as_ref())?);
        }
        Ok(set)
    }

    /// Printed label such as `χ₂₂̄₃₄₅` or `W₁₃₄`; `∅` when empty.
    pub fn label(self) -> String {
        let mut out = String::new();
        let mut comps = self.components().peekable();
        match comps.peek() {
            None => return String::from("∅"),
            Some(c) if c.is_su3() => out.push('χ'),
            Some(_) => out.push('W'),
        }
        for c in comps {
            out.push_str(c.subscript());
        }
        out
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromIterator<Component> for ClassSet {
    fn from_iter<I: IntoIterator<Item = Component>>(iter: I) -> Self {
        let mut s = ClassSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Component::*;

    #[test]
    fn labels() {
        assert_eq!(
            ClassSet::of(&[Chi2, Chi2Bar, Chi3, Chi4, Chi5]).label(),
            "χ₂₂\u{304}₃₄₅"
        );
        assert_eq!(ClassSet::of(&[W1, W3, W4]).label(), "W₁₃₄");
        assert_eq!(ClassSet::EMPTY.label(), "∅");
    }

    #[test]
    fn tokens_round_trip_and_sort() {
        let s = ClassSet::of(&[Chi5, Chi1Bar, Chi1]);
        let t = s.tokens();
        assert_eq!(t, ["chi1", "chi1bar", "chi5"]);
        let mut sorted = t.clone();
        sorted.sort_unstable();
        assert_eq!(t, sorted);
        assert_eq!(ClassSet::from_tokens(&t).unwrap(), s);
        assert!(ClassSet::from_tokens(&["chi9"]).is_err());
    }

    #[test]
    fn module_dimensions_total() {
        let su3: usize = Component::SU3.iter().map(|c| c.module_dim()).sum();
        let g2: usize = Component::G2.iter().map(|c| c.module_dim()).sum();
        assert_eq!((su3, g2), (42, 49));
    }
}
