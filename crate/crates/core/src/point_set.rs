use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::CoeffPoint;

/// Finite set `S` of coefficient points, kept sorted and deduplicated so that
/// every consumer iterates in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<CoeffPoint>,
    label: String,
}

impl PointSet {
    pub fn new(label: impl Into<String>, points: impl IntoIterator<Item = CoeffPoint>) -> Self {
        let points: BTreeSet<CoeffPoint> = points.into_iter().collect();
        PointSet { points: points.into_iter().collect(), label: label.into() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn points(&self) -> &[CoeffPoint] {
        &self.points
    }

    pub fn iter(&self) -> core::slice::Iter<'_, CoeffPoint> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &CoeffPoint) -> bool {
        self.index_of(p).is_some()
    }

    pub fn index_of(&self, p: &CoeffPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a CoeffPoint;
    type IntoIter = core::slice::Iter<'a, CoeffPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
