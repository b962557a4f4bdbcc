use crate::algebra::{Group, GroupMap};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A multiset of group elements (by enumeration index) tagged with its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionMultiset {
    group_label: String,
    group_order: usize,
    counts: BTreeMap<usize, u32>,
}

impl ConnectionMultiset {
    pub fn new(group: &Group, elements: &[usize]) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for &e in elements {
            if e >= group.order() {
                return Err(Error::NotInGroup(format!("index {e} in {}", group.label())));
            }
            *counts.entry(e).or_insert(0) += 1;
        }
        Ok(ConnectionMultiset {
            group_label: group.label(),
            group_order: group.order(),
            counts,
        })
    }

    /// Parses `;`-separated element strings, e.g. `1;4` or `(1,2,3);(1,3,2)`.
    pub fn parse(group: &Group, s: &str) -> Result<Self> {
        let elements = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| group.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        if elements.is_empty() {
            return Err(Error::Parse("empty connection set".into()));
        }
        ConnectionMultiset::new(group, &elements)
    }

    pub fn group_label(&self) -> &str {
        &self.group_label
    }

    pub fn belongs_to(&self, group: &Group) -> bool {
        self.group_label == group.label() && self.group_order == group.order()
    }

    pub fn require_group(&self, group: &Group) -> Result<()> {
        if self.belongs_to(group) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "connection set lives in {}, not {}",
                self.group_label,
                group.label()
            )))
        }
    }

    /// Degree `d = |S|` counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn multiplicity(&self, e: usize) -> u32 {
        self.counts.get(&e).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.counts.iter().map(|(&e, &m)| (e, m))
    }

    pub fn support(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    /// Elements repeated by multiplicity.
    pub fn elements(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(e, m)| std::iter::repeat_n(e, m as usize))
            .collect()
    }

    /// Image multiset under an index map.
    pub fn image(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut counts = BTreeMap::new();
        for (e, m) in self.iter() {
            *counts.entry(f(e)).or_insert(0) += m;
        }
        ConnectionMultiset {
            group_label: self.group_label.clone(),
            group_order: self.group_order,
            counts,
        }
    }

    pub fn inverse(&self, group: &Group) -> Self {
        self.image(|e| group.inv(e))
    }

    pub fn map_image(&self, map: &GroupMap) -> Self {
        self.image(|e| map.apply(e))
    }

    pub fn is_symmetric(&self, group: &Group) -> bool {
        self.iter()
            .all(|(e, m)| self.multiplicity(group.inv(e)) == m)
    }

    /// Collapses multiplicities to 1.
    pub fn as_set(&self) -> Self {
        let mut s = self.clone();
        for m in s.counts.values_mut() {
            *m = 1;
        }
        s
    }

    pub fn union_set(&self, other: &Self) -> Self {
        let mut s = self.as_set();
        for e in other.counts.keys() {
            s.counts.insert(*e, 1);
        }
        s
    }

    pub fn labels(&self, group: &Group) -> Vec<String> {
        self.elements()
            .iter()
            .map(|&e| group.element_label(e))
            .collect()
    }

    /// `;`-joined labels, parseable by [`ConnectionMultiset::parse`].
    pub fn to_spec_string(&self, group: &Group) -> String {
        self.labels(group).join(";")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_symmetry() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1;4").unwrap();
        assert_eq!(s.degree(), 2);
        assert!(s.is_symmetric(&z5));
        let t = ConnectionMultiset::parse(&z5, "1;1;4").unwrap();
        assert_eq!(t.degree(), 3);
        assert!(!t.is_symmetric(&z5));
        assert_eq!(t.as_set().degree(), 2);
        assert!(ConnectionMultiset::parse(&z5, "").is_err());
    }

    #[test]
    fn group_tagging() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let z7 = Group::parse("cyclic:7").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1").unwrap();
        assert!(s.require_group(&z7).is_err());
        assert!(ConnectionMultiset::new(&z5, &[9]).is_err());
    }
}
