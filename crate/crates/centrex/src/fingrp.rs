//! Finite groups presented by multiplication tables.
//!
//! Elements are indices `0..order`; the table stores `table[a][b] = a * b`
//! flattened row major.  Identity and inverses are derived from the table,
//! never trusted from input.  Groups constructed internally (quotients,
//! fiber products) are correct by construction and skip the cubic
//! associativity scan; external tables go through [`FiniteGroup::from_table`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table is empty")]
    Empty,
    #[error("entry {value} at ({row},{col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("row {index} is not a permutation: value {value} repeats")]
    RowNotPermutation { index: usize, value: usize },
    #[error("column {index} is not a permutation: value {value} repeats")]
    ColNotPermutation { index: usize, value: usize },
    #[error("no two sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("associativity fails at ({a},{b},{c}): ({a}{b}){c} != {a}({b}{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subgroup is not normal: conjugate of {element} by {conjugator} escapes")]
    NotNormal { conjugator: usize, element: usize },
    #[error("subset is not closed: {a} * {b} escapes")]
    NotClosed { a: usize, b: usize },
    #[error("map is not a homomorphism at ({a},{b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("source and target do not match the stated groups")]
    Mismatch,
    #[error("size {size} exceeds the enumeration guard {guard}")]
    SizeGuard { size: usize, guard: usize },
}

/// Finite group as a validated multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Validates an external table completely, including the cubic
    /// associativity scan.  Returns the first violation found, with the
    /// witnessing indices.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Arc<Self>, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value: v });
                }
            }
        }
        for (index, r) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &v in r {
                if seen[v] {
                    return Err(GroupError::RowNotPermutation { index, value: v });
                }
                seen[v] = true;
            }
        }
        for index in 0..order {
            let mut seen = vec![false; order];
            for r in &table {
                let v = r[index];
                if seen[v] {
                    return Err(GroupError::ColNotPermutation { index, value: v });
                }
                seen[v] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(GroupError::NoInverse { element: x })?;
            inverse[x] = inv as u32;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let flat = table.into_iter().flatten().map(|v| v as u32).collect();
        Ok(Arc::new(FiniteGroup { order, table: flat, identity, inverse, names }))
    }

    /// Constructor for tables that are correct by construction (quotients,
    /// fiber products, permutation closures).  Derives identity and
    /// inverses; skips the associativity scan.
    fn from_table_trusted(
        order: usize,
        table: Vec<u32>,
        names: Option<Vec<String>>,
    ) -> Arc<Self> {
        debug_assert_eq!(table.len(), order * order);
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .expect("constructed table has an identity");
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| at(x, y) == identity)
                    .expect("constructed table has inverses") as u32
            })
            .collect();
        Arc::new(FiniteGroup { order, table, identity, inverse, names })
    }

    /// Group generated by permutations of `0..degree`, elements in breadth
    /// first discovery order starting from the identity.
    pub fn from_permutations(
        degree: usize,
        gens: &[Vec<usize>],
        namer: Option<&dyn Fn(&[usize]) -> String>,
    ) -> Arc<Self> {
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for g in gens {
                let p = &elems[i];
                let composed: Vec<usize> = (0..degree).map(|k| g[p[k]]).collect();
                if !index.contains_key(&composed) {
                    index.insert(composed.clone(), elems.len());
                    frontier.push(elems.len());
                    elems.push(composed);
                }
            }
        }
        let order = elems.len();
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let pa = &elems[a];
                let pb = &elems[b];
                let prod: Vec<usize> = (0..degree).map(|k| pa[pb[k]]).collect();
                table[a * order + b] = index[&prod] as u32;
            }
        }
        let names = namer.map(|f| elems.iter().map(|p| f(p)).collect());
        Self::from_table_trusted(order, table, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Smallest subgroup containing `seed`, closed under products and
    /// inverses.  Elements come back sorted.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut frontier: Vec<usize> = Vec::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                elems.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            let mut new = Vec::new();
            let xin = self.inv(x);
            if !member[xin] {
                new.push(xin);
            }
            for i in 0..elems.len() {
                let k = elems[i];
                for p in [self.mul(k, x), self.mul(x, k)] {
                    if !member[p] {
                        member[p] = true;
                        elems.push(p);
                        frontier.push(p);
                    }
                }
            }
            for p in new {
                if !member[p] {
                    member[p] = true;
                    elems.push(p);
                    frontier.push(p);
                }
            }
        }
        elems.sort_unstable();
        Subgroup { elems }
    }

    /// Smallest normal subgroup containing `seed`: closure of the full
    /// conjugate set, which is already conjugation stable.
    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        let mut conjugates = Vec::with_capacity(seed.len() * self.order);
        for &s in seed {
            for g in 0..self.order {
                conjugates.push(self.conj(g, s));
            }
        }
        self.subgroup_closure(&conjugates)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                comms.push(self.commutator(a, b));
            }
        }
        self.subgroup_closure(&comms)
    }

    pub fn centre(&self) -> Subgroup {
        let elems = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { elems }
    }

    /// Normal closure of `{ [k, b] : k in k_sub, b in b_sub }`.
    pub fn mixed_commutator(&self, k_sub: &Subgroup, b_sub: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &k in &k_sub.elems {
            for &b in &b_sub.elems {
                comms.push(self.commutator(k, b));
            }
        }
        self.normal_closure(&comms)
    }

    /// Quotient by a normal subgroup.  Cosets are indexed by their minimal
    /// representative in element order, ascending, so the construction is
    /// canonical.
    pub fn quotient(
        self: &Arc<Self>,
        n: &Subgroup,
    ) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
        n.check_subgroup(self)?;
        n.check_normal(self)?;
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &h in &n.elems {
                coset_of[self.mul(x, h)] = c;
            }
        }
        let q_order = reps.len();
        let mut table = vec![0u32; q_order * q_order];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * q_order + b] = coset_of[self.mul(ra, rb)] as u32;
            }
        }
        let names = Some(reps.iter().map(|&r| format!("[{}]", self.name(r))).collect());
        let q = FiniteGroup::from_table_trusted(q_order, table, names);
        let hom = GroupHom {
            source: Arc::clone(self),
            target: Arc::clone(&q),
            images: coset_of,
        };
        Ok((q, hom))
    }

    pub fn trivial_group() -> Arc<FiniteGroup> {
        FiniteGroup::from_table_trusted(1, vec![0], Some(vec!["e".into()]))
    }

    /// Direct product with componentwise multiplication; element `(a, b)`
    /// sits at index `a * |B| + b`.
    pub fn direct_product(
        a: &Arc<FiniteGroup>,
        b: &Arc<FiniteGroup>,
    ) -> (Arc<FiniteGroup>, GroupHom, GroupHom) {
        let n = a.order * b.order;
        let mut table = vec![0u32; n * n];
        for x0 in 0..a.order {
            for x1 in 0..b.order {
                let x = x0 * b.order + x1;
                for y0 in 0..a.order {
                    for y1 in 0..b.order {
                        let y = y0 * b.order + y1;
                        table[x * n + y] =
                            (a.mul(x0, y0) * b.order + b.mul(x1, y1)) as u32;
                    }
                }
            }
        }
        let names = Some(
            (0..n)
                .map(|x| format!("({},{})", a.name(x / b.order), b.name(x % b.order)))
                .collect(),
        );
        let p = FiniteGroup::from_table_trusted(n, table, names);
        let p0 = GroupHom {
            source: Arc::clone(&p),
            target: Arc::clone(a),
            images: (0..n).map(|x| x / b.order).collect(),
        };
        let p1 = GroupHom {
            source: Arc::clone(&p),
            target: Arc::clone(b),
            images: (0..n).map(|x| x % b.order).collect(),
        };
        (p, p0, p1)
    }

    /// Subgroup as a group in its own right, with the inclusion.
    pub fn embed_subgroup(
        self: &Arc<Self>,
        h: &Subgroup,
    ) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
        h.check_subgroup(self)?;
        let k = h.order();
        let pos = |x: usize| h.elems.binary_search(&x).expect("closed subgroup");
        let mut table = vec![0u32; k * k];
        for (i, &a) in h.elems.iter().enumerate() {
            for (j, &b) in h.elems.iter().enumerate() {
                table[i * k + j] = pos(self.mul(a, b)) as u32;
            }
        }
        let names = Some(h.elems.iter().map(|&x| self.name(x)).collect());
        let g = FiniteGroup::from_table_trusted(k, table, names);
        let incl = GroupHom {
            source: Arc::clone(&g),
            target: Arc::clone(self),
            images: h.elems.clone(),
        };
        Ok((g, incl))
    }
}

/// Subgroup as a sorted element list of the ambient group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    elems: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup { elems: vec![g.id()] }
    }

    pub fn full(g: &FiniteGroup) -> Self {
        Subgroup { elems: (0..g.order()).collect() }
    }

    pub fn from_elements(mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        Subgroup { elems }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_trivial_in(&self, g: &FiniteGroup) -> bool {
        self.elems == [g.id()]
    }

    pub fn check_subgroup(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        if self.elems.is_empty() || !self.contains(g.id()) {
            return Err(GroupError::NoIdentity);
        }
        for &a in &self.elems {
            for &b in &self.elems {
                if !self.contains(g.mul(a, b)) {
                    return Err(GroupError::NotClosed { a, b });
                }
            }
        }
        Ok(())
    }

    pub fn check_normal(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        for c in g.elements() {
            for &x in &self.elems {
                if !self.contains(g.conj(c, x)) {
                    return Err(GroupError::NotNormal { conjugator: c, element: x });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.check_normal(g).is_ok()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elems = self.elems.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup { elems }
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }
}

/// Group homomorphism as a total image list over the source.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, images {:?})",
            self.source.order(),
            self.target.order(),
            self.images
        )
    }
}

impl GroupHom {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(GroupError::Mismatch);
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: Arc::clone(g),
            target: Arc::clone(g),
            images: (0..g.order()).collect(),
        }
    }

    pub fn to_trivial(g: &Arc<FiniteGroup>, z: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: Arc::clone(g),
            target: Arc::clone(z),
            images: vec![z.id(); g.order()],
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self` after `first`.
    pub fn compose_after(&self, first: &GroupHom) -> Result<GroupHom, GroupError> {
        if first.target != self.source {
            return Err(GroupError::Mismatch);
        }
        let images = first.images.iter().map(|&y| self.images[y]).collect();
        Ok(GroupHom {
            source: Arc::clone(&first.source),
            target: Arc::clone(&self.target),
            images,
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let id = self.target.id();
        Subgroup {
            elems: self.source.elements().filter(|&x| self.images[x] == id).collect(),
        }
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_elements(self.images.clone())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_iso(&self) -> bool {
        self.source.order() == self.target.order() && self.is_surjective()
    }

    pub fn image_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_elements(s.elements().iter().map(|&x| self.images[x]).collect())
    }

    pub fn preimage_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        Subgroup {
            elems: self.source.elements().filter(|&x| s.contains(self.images[x])).collect(),
        }
    }
}

/// Pullback of two homs with common target: pairs `(b, c)` with
/// `f(b) = g(c)` in lexicographic order, multiplied componentwise.
pub fn fiber_product(
    f: &GroupHom,
    g: &GroupHom,
) -> Result<(Arc<FiniteGroup>, GroupHom, GroupHom), GroupError> {
    if f.target != g.target {
        return Err(GroupError::Mismatch);
    }
    let nb = f.source.order();
    let nc = g.source.order();
    let mut pairs = Vec::new();
    let mut index = vec![usize::MAX; nb * nc];
    for b in 0..nb {
        for c in 0..nc {
            if f.apply(b) == g.apply(c) {
                index[b * nc + c] = pairs.len();
                pairs.push((b, c));
            }
        }
    }
    let n = pairs.len();
    let mut table = vec![0u32; n * n];
    for (x, &(b0, c0)) in pairs.iter().enumerate() {
        for (y, &(b1, c1)) in pairs.iter().enumerate() {
            let b = f.source.mul(b0, b1);
            let c = g.source.mul(c0, c1);
            table[x * n + y] = index[b * nc + c] as u32;
        }
    }
    let names = Some(
        pairs
            .iter()
            .map(|&(b, c)| format!("({},{})", f.source.name(b), g.source.name(c)))
            .collect(),
    );
    let p = FiniteGroup::from_table_trusted(n, table, names);
    let p0 = GroupHom {
        source: Arc::clone(&p),
        target: Arc::clone(&f.source),
        images: pairs.iter().map(|&(b, _)| b).collect(),
    };
    let p1 = GroupHom {
        source: Arc::clone(&p),
        target: Arc::clone(&g.source),
        images: pairs.iter().map(|&(_, c)| c).collect(),
    };
    Ok((p, p0, p1))
}

/// Search constraints for [`enumerate_homs`].
pub struct HomConstraint<'a> {
    /// Required images, checked on every element as it becomes known.
    pub pins: &'a [(usize, usize)],
    /// Per element admissible image predicate.
    pub allowed: Option<&'a dyn Fn(usize, usize) -> bool>,
}

impl Default for HomConstraint<'_> {
    fn default() -> Self {
        HomConstraint { pins: &[], allowed: None }
    }
}

/// All homomorphisms `src -> dst` satisfying the constraint, exhaustively,
/// ordered lexicographically by the images of a fixed generating sequence.
///
/// The generating sequence is chosen greedily: repeatedly take the element
/// whose addition enlarges the generated subgroup the most (smallest index
/// on ties).  Backtracking assigns generator images and propagates through
/// products, so every multiplication is checked before a map is emitted.
pub fn enumerate_homs(
    src: &Arc<FiniteGroup>,
    dst: &Arc<FiniteGroup>,
    constraint: &HomConstraint<'_>,
    guard: usize,
) -> Result<Vec<GroupHom>, GroupError> {
    if src.order() > guard {
        return Err(GroupError::SizeGuard { size: src.order(), guard });
    }
    let gens = greedy_generators(src);
    let mut pin_of = vec![usize::MAX; src.order()];
    for &(x, y) in constraint.pins {
        if x >= src.order() || y >= dst.order() {
            return Err(GroupError::Mismatch);
        }
        if pin_of[x] != usize::MAX && pin_of[x] != y {
            return Ok(Vec::new());
        }
        pin_of[x] = y;
    }
    let admits = |x: usize, y: usize| {
        (pin_of[x] == usize::MAX || pin_of[x] == y)
            && constraint.allowed.map_or(true, |f| f(x, y))
    };
    if !admits(src.id(), dst.id()) {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; src.order()];
    map[src.id()] = dst.id();
    let known = vec![src.id()];
    search(src, dst, &gens, 0, map.as_mut_slice(), &known, &admits, &mut out);
    return Ok(out);

    #[allow(clippy::too_many_arguments)]
    fn search(
        src: &Arc<FiniteGroup>,
        dst: &Arc<FiniteGroup>,
        gens: &[usize],
        depth: usize,
        map: &mut [usize],
        known: &[usize],
        admits: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<GroupHom>,
    ) {
        if depth == gens.len() {
            debug_assert!(map.iter().all(|&y| y != usize::MAX));
            out.push(GroupHom {
                source: Arc::clone(src),
                target: Arc::clone(dst),
                images: map.to_vec(),
            });
            return;
        }
        let g = gens[depth];
        for y in 0..dst.order() {
            let mut trial = map.to_vec();
            let mut trial_known = known.to_vec();
            if extend(src, dst, &mut trial, &mut trial_known, g, y, admits) {
                search(src, dst, gens, depth + 1, &mut trial, &trial_known, admits, out);
            }
        }
    }

    /// Assigns `map[x] = y` and closes under products against everything
    /// known, in both orders.  Returns false on any conflict.
    fn extend(
        src: &FiniteGroup,
        dst: &FiniteGroup,
        map: &mut Vec<usize>,
        known: &mut Vec<usize>,
        x: usize,
        y: usize,
        admits: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if map[x] != usize::MAX {
                if map[x] != y {
                    return false;
                }
                continue;
            }
            if !admits(x, y) {
                return false;
            }
            map[x] = y;
            known.push(x);
            for i in 0..known.len() {
                let k = known[i];
                queue.push((src.mul(k, x), dst.mul(map[k], y)));
                queue.push((src.mul(x, k), dst.mul(y, map[k])));
            }
        }
        true
    }
}

/// Greedy generating sequence: each step adds the element that makes the
/// generated subgroup largest, preferring smaller indices on ties.
fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = g.subgroup_closure(&[]);
    while span.order() < g.order() {
        let mut best: Option<(usize, usize)> = None;
        for x in g.elements() {
            if span.contains(x) {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let grown = g.subgroup_closure(&seed).order();
            if best.map_or(true, |(size, _)| grown > size) {
                best = Some((grown, x));
            }
        }
        let (_, x) = best.expect("proper subgroup misses some element");
        gens.push(x);
        span = g.subgroup_closure(&gens);
    }
    gens
}

/// All sections of `f`, in other words homs `s` with `f after s` the
/// identity of the target.
pub fn sections_of(f: &GroupHom, guard: usize) -> Result<Vec<GroupHom>, GroupError> {
    let allowed = |a: usize, b: usize| f.apply(b) == a;
    enumerate_homs(
        f.target(),
        f.source(),
        &HomConstraint { pins: &[], allowed: Some(&allowed) },
        guard,
    )
}
