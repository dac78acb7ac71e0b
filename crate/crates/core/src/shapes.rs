//! Partitions, k-partite and marked k-partite partitions, skew diagrams,
//! border-strip analysis, contents and cover relations.
//!
//! Text grammar shared by the CLI and JSON output: components are joined by
//! `|`, an empty component is `-`, parts are comma-separated and the marked
//! part carries a `*` suffix. `-|4*,2,1|2,1` denotes `(∅, (4*,2,1), (2,1))`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1),
            "parts must be weakly decreasing positive integers: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length with 1-based row index; rows past the end have length 0.
    pub fn row(&self, r: usize) -> usize {
        assert!(r >= 1);
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// `z_ρ = ∏ i^{m_i} m_i!`.
    pub fn z_value(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            z *= BigUint::from(part).pow(mult);
            for m in 1..=mult as usize {
                z *= BigUint::from(m);
            }
        }
        z
    }

    /// True iff the diagram of `self` fits inside the diagram of `outer`.
    pub fn contained_in(&self, outer: &Partition) -> bool {
        (1..=self.len()).all(|r| self.row(r) <= outer.row(r))
    }

    /// Positions `(row, col)` where one cell can be added to yield another
    /// partition, in row order.
    pub fn exterior_corners(&self) -> Vec<(usize, usize)> {
        let mut corners = Vec::new();
        for r in 1..=self.len() + 1 {
            if self.row(r) < self.row_above(r) {
                corners.push((r, self.row(r) + 1));
            }
        }
        corners
    }

    fn row_above(&self, r: usize) -> usize {
        if r == 1 {
            usize::MAX
        } else {
            self.row(r - 1)
        }
    }

    /// Positions `(row, col)` of removable corner cells.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        let mut corners = Vec::new();
        for r in 1..=self.len() {
            if self.row(r) > self.row(r + 1) {
                corners.push((r, self.row(r)));
            }
        }
        corners
    }

    /// The partition with one cell added at exterior corner row `r`.
    pub fn with_cell_at_row(&self, r: usize) -> Partition {
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Partition::new(parts)
    }

    /// The partition with the corner cell of row `r` removed.
    pub fn without_corner_at_row(&self, r: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.remove(r - 1);
        }
        Partition::new(parts)
    }

    /// All partitions of `n`, first part descending: `(n)` first, `(1^n)`
    /// last. This is the crate-wide canonical partition order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn gen(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                gen(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        gen(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All sub-partitions of `self` with the given size, in canonical order.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<Partition> {
        fn gen(
            rows: &[usize],
            row: usize,
            max_part: usize,
            remaining: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            if row >= rows.len() {
                return;
            }
            let cap = rows[row].min(max_part).min(remaining);
            for part in (1..=cap).rev() {
                prefix.push(part);
                gen(rows, row + 1, part, remaining - part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if size <= self.size() {
            gen(&self.parts, 0, usize::MAX, size, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All `(ν, height)` with `ν ⊆ self` and `self/ν` a border strip of the
    /// given size.
    pub fn border_strip_removals(&self, size: usize) -> Vec<(Partition, usize)> {
        if size == 0 || size > self.size() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for nu in self.subpartitions_of_size(self.size() - size) {
            let skew = SkewShape::new(self.clone(), nu.clone()).unwrap();
            if let Some(h) = skew.border_strip_height() {
                out.push((nu, h));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A cell of a (k-partite) Young diagram, 1-based, tagged with its
/// component index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DiagramBox {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl DiagramBox {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1);
        DiagramBox {
            component,
            row,
            col,
        }
    }

    /// Content `(-1)^component · (col - row)`.
    pub fn content(&self) -> i64 {
        let diff = self.col as i64 - self.row as i64;
        if self.component % 2 == 0 {
            diff
        } else {
            -diff
        }
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Result of analyzing a skew shape that contains no 2×2 block: connected
/// components, sharp corners and dull boxes.
///
/// `rows_occupied` counts rows per connected component and sums them, so
/// `height = rows_occupied - components`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrokenStrip {
    pub components: usize,
    pub rows_occupied: usize,
    pub height: usize,
    pub sharp_corners: Vec<DiagramBox>,
    pub dull_boxes: Vec<DiagramBox>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::Invalid(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)` in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for r in 1..=self.outer.len() {
            for c in self.inner.row(r) + 1..=self.outer.row(r) {
                cells.push((r, c));
            }
        }
        cells
    }

    fn contains_two_by_two(cells: &HashSet<(usize, usize)>) -> bool {
        cells.iter().any(|&(r, c)| {
            cells.contains(&(r, c + 1))
                && cells.contains(&(r + 1, c))
                && cells.contains(&(r + 1, c + 1))
        })
    }

    /// Height if the shape is a border strip (nonempty, connected, no 2×2
    /// block): one less than the number of rows it occupies. The empty
    /// shape is not a border strip.
    pub fn border_strip_height(&self) -> Option<usize> {
        let cells = self.cells();
        if cells.is_empty() {
            return None;
        }
        let set: HashSet<_> = cells.iter().copied().collect();
        if Self::contains_two_by_two(&set) {
            return None;
        }
        // Connectivity by edge adjacency, walked from the first cell.
        let mut seen = HashSet::new();
        let mut stack = vec![cells[0]];
        while let Some((r, c)) = stack.pop() {
            if !seen.insert((r, c)) {
                continue;
            }
            for next in [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))] {
                if set.contains(&next) {
                    stack.push(next);
                }
            }
        }
        if seen.len() != cells.len() {
            return None;
        }
        let rows: HashSet<usize> = cells.iter().map(|&(r, _)| r).collect();
        Some(rows.len() - 1)
    }

    /// Analysis of a broken border strip (nonempty, no 2×2 block, possibly
    /// disconnected). Returned boxes are tagged with `component`, the
    /// k-partite index the shape lives in, and sorted by position.
    pub fn broken_strip_analysis(&self, component: usize) -> Option<BrokenStrip> {
        let cells = self.cells();
        if cells.is_empty() {
            return None;
        }
        let set: HashSet<_> = cells.iter().copied().collect();
        if Self::contains_two_by_two(&set) {
            return None;
        }

        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut components = 0;
        let mut rows_occupied = 0;
        for &start in &cells {
            if seen.contains(&start) {
                continue;
            }
            components += 1;
            let mut rows = HashSet::new();
            let mut stack = vec![start];
            while let Some((r, c)) = stack.pop() {
                if !seen.insert((r, c)) {
                    continue;
                }
                rows.insert(r);
                for next in [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))] {
                    if set.contains(&next) {
                        stack.push(next);
                    }
                }
            }
            rows_occupied += rows.len();
        }

        let mut sharp_corners = Vec::new();
        let mut dull_boxes = Vec::new();
        for &(r, c) in &cells {
            let below = set.contains(&(r + 1, c));
            let right = set.contains(&(r, c + 1));
            if below && right {
                sharp_corners.push(DiagramBox::new(component, r, c));
            } else if !below && !right {
                dull_boxes.push(DiagramBox::new(component, r, c));
            }
        }
        sharp_corners.sort();
        dull_boxes.sort();

        Some(BrokenStrip {
            components,
            rows_occupied,
            height: rows_occupied - components,
            sharp_corners,
            dull_boxes,
        })
    }
}

/// A k-tuple of partitions with total size `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KPartitePartition {
    components: Vec<Partition>,
}

impl KPartitePartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "k must be at least 1");
        KPartitePartition { components }
    }

    pub fn empty(k: usize) -> Self {
        Self::new(vec![Partition::empty(); k])
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn with_component(&self, i: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[i] = p;
        KPartitePartition { components }
    }

    /// Componentwise containment.
    pub fn contained_in(&self, outer: &KPartitePartition) -> bool {
        assert_eq!(self.k(), outer.k());
        self.components
            .iter()
            .zip(&outer.components)
            .all(|(a, b)| a.contained_in(b))
    }

    /// The cover relation `self ↗ other`: `other` is `self` plus one cell
    /// added at an exterior corner of exactly one component.
    pub fn covers(&self, other: &KPartitePartition) -> bool {
        if self.k() != other.k() || self.size() + 1 != other.size() {
            return false;
        }
        let mut found_diff = false;
        for (a, b) in self.components.iter().zip(&other.components) {
            if a == b {
                continue;
            }
            if found_diff || !Self::is_one_box_addition(a, b) {
                return false;
            }
            found_diff = true;
        }
        found_diff
    }

    fn is_one_box_addition(smaller: &Partition, larger: &Partition) -> bool {
        if smaller.size() + 1 != larger.size() || larger.len() < smaller.len() {
            return false;
        }
        let mut diff_rows = 0;
        for r in 1..=larger.len() {
            match larger.row(r).checked_sub(smaller.row(r)) {
                Some(0) => {}
                Some(1) => diff_rows += 1,
                _ => return false,
            }
        }
        diff_rows == 1
    }

    /// All shapes obtained by adding one cell, i.e. `{λ : self ↗ λ}`,
    /// ordered by component then corner row.
    pub fn one_box_additions(&self) -> Vec<KPartitePartition> {
        let mut out = Vec::new();
        for (i, p) in self.components.iter().enumerate() {
            for (r, _) in p.exterior_corners() {
                out.push(self.with_component(i, p.with_cell_at_row(r)));
            }
        }
        out
    }

    /// All shapes obtained by removing one corner cell, i.e.
    /// `{σ : σ ↗ self}`, ordered by component then corner row.
    pub fn one_box_removals(&self) -> Vec<KPartitePartition> {
        let mut out = Vec::new();
        for (i, p) in self.components.iter().enumerate() {
            for (r, _) in p.removable_corners() {
                out.push(self.with_component(i, p.without_corner_at_row(r)));
            }
        }
        out
    }

    /// All parts tagged with their source component, sorted by part
    /// descending then component ascending.
    pub fn gather(&self) -> Vec<(usize, usize)> {
        let mut parts = Vec::new();
        for (i, p) in self.components.iter().enumerate() {
            for &part in p.parts() {
                parts.push((part, i));
            }
        }
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        parts
    }

    /// All k-partite partitions of `n`, in canonical order: component-size
    /// compositions with earlier components taking larger sizes first, and
    /// within a composition the later components varying fastest.
    pub fn all(n: usize, k: usize) -> Vec<KPartitePartition> {
        assert!(k >= 1);
        fn gen(
            n_left: usize,
            k_left: usize,
            prefix: &mut Vec<Partition>,
            out: &mut Vec<KPartitePartition>,
        ) {
            if k_left == 1 {
                for p in Partition::all(n_left) {
                    prefix.push(p);
                    out.push(KPartitePartition {
                        components: prefix.clone(),
                    });
                    prefix.pop();
                }
                return;
            }
            for size in (0..=n_left).rev() {
                for p in Partition::all(size) {
                    prefix.push(p);
                    gen(n_left - size, k_left - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        gen(n, k, &mut Vec::new(), &mut out);
        out
    }

    /// Parses the `|`-grammar; `k` is the number of segments.
    pub fn parse(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        for segment in s.split('|') {
            let (p, marked) = parse_partition_segment(segment.trim())?;
            if marked.is_some() {
                return Err(Error::Parse(format!(
                    "unexpected mark in unmarked shape {s:?}"
                )));
            }
            components.push(p);
        }
        Ok(KPartitePartition { components })
    }
}

impl fmt::Display for KPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", segs.join("|"))
    }
}

/// A k-partite partition with one distinguished part `(marked_part,
/// marked_component)`. Marks address a part *value*, not a specific copy:
/// marking different copies of equal parts denotes the same object.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedKPartitePartition {
    base: KPartitePartition,
    marked_component: usize,
    marked_part: usize,
}

impl MarkedKPartitePartition {
    pub fn new(base: KPartitePartition, marked_component: usize, marked_part: usize) -> Self {
        assert!(
            base.component(marked_component).multiplicity(marked_part) >= 1,
            "marked part {marked_part} not present in component {marked_component} of {base}"
        );
        MarkedKPartitePartition {
            base,
            marked_component,
            marked_part,
        }
    }

    pub fn base(&self) -> &KPartitePartition {
        &self.base
    }

    pub fn marked_component(&self) -> usize {
        self.marked_component
    }

    pub fn marked_part(&self) -> usize {
        self.marked_part
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// All marked k-partite partitions of `n`, in canonical order: base
    /// shapes in [`KPartitePartition::all`] order, marks by component
    /// ascending then part value descending.
    pub fn all(n: usize, k: usize) -> Vec<MarkedKPartitePartition> {
        let mut out = Vec::new();
        for base in KPartitePartition::all(n, k) {
            for (i, p) in base.components().iter().enumerate() {
                let mut prev = usize::MAX;
                for &part in p.parts() {
                    if part != prev {
                        out.push(MarkedKPartitePartition::new(base.clone(), i, part));
                        prev = part;
                    }
                }
            }
        }
        out
    }

    /// Parses the `|`-grammar with exactly one `*`-marked part.
    pub fn parse(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut mark = None;
        for (i, segment) in s.split('|').enumerate() {
            let (p, marked) = parse_partition_segment(segment.trim())?;
            if let Some(part) = marked {
                if mark.is_some() {
                    return Err(Error::Parse(format!("more than one mark in {s:?}")));
                }
                mark = Some((i, part));
            }
            components.push(p);
        }
        let (component, part) =
            mark.ok_or_else(|| Error::Parse(format!("no marked part in {s:?}")))?;
        Ok(MarkedKPartitePartition::new(
            KPartitePartition::new(components),
            component,
            part,
        ))
    }
}

impl fmt::Display for MarkedKPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs: Vec<String> = self
            .base
            .components()
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i != self.marked_component || p.is_empty() {
                    return p.to_string();
                }
                // Star the last copy of the marked value.
                let last = p
                    .parts()
                    .iter()
                    .rposition(|&x| x == self.marked_part)
                    .expect("marked part present");
                let cells: Vec<String> = p
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(j, part)| {
                        if j == last {
                            format!("{part}*")
                        } else {
                            part.to_string()
                        }
                    })
                    .collect();
                cells.join(",")
            })
            .collect();
        write!(f, "{}", segs.join("|"))
    }
}

/// Parses one component segment, returning the partition and the marked
/// part value if a `*` was present.
fn parse_partition_segment(seg: &str) -> Result<(Partition, Option<usize>)> {
    if seg == "-" {
        return Ok((Partition::empty(), None));
    }
    if seg.is_empty() {
        return Err(Error::Parse("empty component (use \"-\")".into()));
    }
    let mut parts = Vec::new();
    let mut marked = None;
    for tok in seg.split(',') {
        let tok = tok.trim();
        let (digits, is_marked) = match tok.strip_suffix('*') {
            Some(d) => (d, true),
            None => (tok, false),
        };
        let part: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad part {tok:?}")))?;
        if part == 0 {
            return Err(Error::Parse("parts must be positive".into()));
        }
        if is_marked {
            if marked.is_some() {
                return Err(Error::Parse(format!("more than one mark in {seg:?}")));
            }
            marked = Some(part);
        }
        parts.push(part);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!(
            "parts must be weakly decreasing: {seg:?}"
        )));
    }
    Ok((Partition::new(parts), marked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn kp(components: &[&[usize]]) -> KPartitePartition {
        KPartitePartition::new(components.iter().map(|c| p(c)).collect())
    }

    #[test]
    fn z_value_examples() {
        assert_eq!(p(&[2, 2, 1]).z_value(), BigUint::from(8u32));
        assert_eq!(Partition::empty().z_value(), BigUint::from(1u32));
        for n in 1..=9usize {
            assert_eq!(p(&[n]).z_value(), BigUint::from(n));
        }
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[3, 1]).contained_in(&p(&[5, 4, 2, 1, 1])));
        let lam = p(&[4, 2, 2]);
        assert!(lam.contained_in(&lam));
        assert!(!p(&[2]).contained_in(&p(&[1, 1])));
    }

    #[test]
    fn border_strip_heights_from_worked_diagrams() {
        let outer = p(&[5, 4, 2, 1, 1]);
        let strip = SkewShape::new(outer.clone(), p(&[3, 1])).unwrap();
        assert_eq!(strip.border_strip_height(), Some(4));
        let not_strip = SkewShape::new(outer.clone(), p(&[4, 2, 1])).unwrap();
        assert_eq!(not_strip.border_strip_height(), None);
        let not_strip2 = SkewShape::new(outer.clone(), p(&[2, 1])).unwrap();
        assert_eq!(not_strip2.border_strip_height(), None);
        let empty = SkewShape::new(outer.clone(), outer).unwrap();
        assert_eq!(empty.border_strip_height(), None);
    }

    #[test]
    fn broken_strip_three_components() {
        let skew = SkewShape::new(p(&[9, 6, 6, 5, 4, 1, 1]), p(&[6, 6, 4, 4])).unwrap();
        let a = skew.broken_strip_analysis(0).unwrap();
        assert_eq!(a.components, 3);
        assert_eq!(a.sharp_corners.len(), 2);
        assert_eq!(a.dull_boxes.len(), 5);
        assert_eq!(
            a.sharp_corners,
            vec![DiagramBox::new(0, 3, 5), DiagramBox::new(0, 5, 1)]
        );
        assert_eq!(
            a.dull_boxes,
            vec![
                DiagramBox::new(0, 1, 9),
                DiagramBox::new(0, 3, 6),
                DiagramBox::new(0, 4, 5),
                DiagramBox::new(0, 5, 4),
                DiagramBox::new(0, 7, 1),
            ]
        );
        assert_eq!(a.height, 3);
    }

    #[test]
    fn broken_strip_small_shapes() {
        let skew = SkewShape::new(p(&[2, 1]), Partition::empty()).unwrap();
        let a = skew.broken_strip_analysis(0).unwrap();
        assert_eq!((a.components, a.height), (1, 1));
        assert_eq!(a.sharp_corners, vec![DiagramBox::new(0, 1, 1)]);
        assert_eq!(
            a.dull_boxes,
            vec![DiagramBox::new(0, 1, 2), DiagramBox::new(0, 2, 1)]
        );
        // Contents of the dull boxes are 1 and -1, the sharp corner is 0.
        assert_eq!(a.sharp_corners[0].content(), 0);
        assert_eq!(a.dull_boxes[0].content(), 1);
        assert_eq!(a.dull_boxes[1].content(), -1);

        let single = SkewShape::new(p(&[1]), Partition::empty()).unwrap();
        let a = single.broken_strip_analysis(0).unwrap();
        assert_eq!((a.sharp_corners.len(), a.dull_boxes.len(), a.height), (0, 1, 0));

        let blocked = SkewShape::new(p(&[2, 2]), Partition::empty()).unwrap();
        assert!(blocked.broken_strip_analysis(0).is_none());
    }

    #[test]
    fn content_sign_alternates_with_component() {
        assert_eq!(DiagramBox::new(0, 1, 2).content(), 1);
        assert_eq!(DiagramBox::new(1, 1, 2).content(), -1);
        for t in 0..4 {
            assert_eq!(DiagramBox::new(t, 3, 3).content(), 0);
        }
    }

    #[test]
    fn exterior_corners_examples() {
        let corners = p(&[5, 3, 3, 1, 1]).exterior_corners();
        assert_eq!(corners, vec![(1, 6), (2, 4), (4, 2), (6, 1)]);
        assert_eq!(Partition::empty().exterior_corners(), vec![(1, 1)]);
        assert_eq!(p(&[4]).exterior_corners(), vec![(1, 5), (2, 1)]);
    }

    #[test]
    fn corner_count_is_distinct_parts_plus_one() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let distinct: HashSet<usize> = lam.parts().iter().copied().collect();
                assert_eq!(
                    lam.exterior_corners().len(),
                    distinct.len() + 1,
                    "partition {lam}"
                );
            }
        }
    }

    #[test]
    fn covers_examples() {
        assert!(kp(&[&[1], &[]]).covers(&kp(&[&[2], &[]])));
        assert!(kp(&[&[1], &[]]).covers(&kp(&[&[1], &[1]])));
        assert!(!kp(&[&[1], &[]]).covers(&kp(&[&[3], &[]])));
        assert!(!kp(&[&[1], &[]]).covers(&kp(&[&[1], &[]])));
    }

    #[test]
    fn covers_agrees_with_corner_addition_enumeration() {
        for k in 1..=3usize {
            for n in 1..=6usize {
                if k == 3 && n > 4 {
                    continue;
                }
                for mu in KPartitePartition::all(n - 1, k) {
                    let additions: HashSet<KPartitePartition> =
                        mu.one_box_additions().into_iter().collect();
                    for lam in KPartitePartition::all(n, k) {
                        assert_eq!(
                            mu.covers(&lam),
                            additions.contains(&lam),
                            "mu={mu} lam={lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gather_examples() {
        assert_eq!(
            kp(&[&[2, 1], &[2]]).gather(),
            vec![(2, 0), (2, 1), (1, 0)]
        );
        assert_eq!(kp(&[&[], &[]]).gather(), vec![]);
        assert_eq!(kp(&[&[], &[3]]).gather(), vec![(3, 1)]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(MarkedKPartitePartition::all(2, 2).len(), 6);
        assert_eq!(MarkedKPartitePartition::all(3, 1).len(), 4);
        assert_eq!(KPartitePartition::all(0, 3).len(), 1);
        assert!(KPartitePartition::all(0, 3)[0].is_empty());
        assert_eq!(KPartitePartition::all(2, 2).len(), 5);
        assert_eq!(KPartitePartition::all(4, 1).len(), 5);
        // Marked bipartitions of 3: the 16 columns of the worked n=3 tables.
        assert_eq!(MarkedKPartitePartition::all(3, 2).len(), 16);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        for (n, k) in [(5, 1), (4, 2), (3, 3)] {
            let all = KPartitePartition::all(n, k);
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(all.len(), set.len());
            let marked = MarkedKPartitePartition::all(n, k);
            let mset: HashSet<_> = marked.iter().cloned().collect();
            assert_eq!(marked.len(), mset.len());
        }
    }

    #[test]
    fn border_and_broken_analyses_agree_on_connected_shapes() {
        for n in 1..=6 {
            for outer in Partition::all(n) {
                for size in 0..=n {
                    for inner in outer.subpartitions_of_size(size) {
                        let skew = SkewShape::new(outer.clone(), inner).unwrap();
                        let bs = skew.border_strip_height();
                        let analysis = skew.broken_strip_analysis(0);
                        match analysis {
                            Some(a) if a.components == 1 => {
                                assert_eq!(bs, Some(a.height), "skew {skew:?}")
                            }
                            _ => assert_eq!(bs, None, "skew {skew:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grammar_examples() {
        let m = MarkedKPartitePartition::parse("-|4*,2,1|2,1").unwrap();
        assert_eq!(m.k(), 3);
        assert_eq!(m.marked_component(), 1);
        assert_eq!(m.marked_part(), 4);
        assert_eq!(m.to_string(), "-|4*,2,1|2,1");

        let u = KPartitePartition::parse("2,1|-").unwrap();
        assert_eq!(u.to_string(), "2,1|-");
        assert_eq!(u.size(), 3);

        // Star lands on the last copy of the marked value.
        let m = MarkedKPartitePartition::new(kp(&[&[1, 1, 1]]), 0, 1);
        assert_eq!(m.to_string(), "1,1,1*");

        assert!(MarkedKPartitePartition::parse("2,1").is_err());
        assert!(KPartitePartition::parse("2,1*").is_err());
        assert!(MarkedKPartitePartition::parse("1*,2").is_err());
    }

    proptest! {
        #[test]
        fn marked_grammar_round_trips(idx in 0usize..1000) {
            let all = MarkedKPartitePartition::all(4, 2);
            let m = &all[idx % all.len()];
            let s = m.to_string();
            prop_assert_eq!(&MarkedKPartitePartition::parse(&s).unwrap(), m);
        }

        #[test]
        fn unmarked_grammar_round_trips(idx in 0usize..1000) {
            let all = KPartitePartition::all(5, 3);
            let u = &all[idx % all.len()];
            let s = u.to_string();
            prop_assert_eq!(&KPartitePartition::parse(&s).unwrap(), u);
        }
    }
}
