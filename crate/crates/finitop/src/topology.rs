//! Finite topological spaces as explicit families of open sets.
//!
//! Every finite topology is determined by its minimal-neighborhood map
//! `x ↦ U_x = ∩{O open : x ∈ O}`: the opens are exactly the sets `O`
//! with `U_x ⊆ O` for all `x ∈ O`. [`MinNbhds`] carries that map for a
//! generated topology without materializing the open family, which is
//! what makes topology-equality checks feasible when the family would
//! be the full power set of a 32-point set.

use std::collections::HashSet;

use crate::error::{capacity_err, input_err, Result};
use crate::order::Poset;
use crate::pointset::{canonicalize_family, PointSet, MAX_POINTS};

/// Default guard on materialized open families.
pub const DEFAULT_MAX_OPENS: usize = 1 << 16;

/// An explicit finite topological space: `k` points and the full family
/// of open sets in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct FinSpace {
    k: usize,
    opens: Vec<PointSet>,
}

impl std::fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinSpace(k={}, {} opens)", self.k, self.opens.len())
    }
}

/// The minimal-neighborhood map of a (possibly huge) generated topology.
#[derive(Clone, PartialEq, Eq)]
pub struct MinNbhds {
    k: usize,
    nbhds: Vec<PointSet>,
}

/// T1/Hausdorff verdicts with the least pair that cannot be separated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub t1: bool,
    pub hausdorff: bool,
    pub witness: Option<(usize, usize)>,
}

/// A finite space paired with a partial order on the same points.
#[derive(Clone)]
pub struct OrderedSpace {
    pub space: FinSpace,
    pub order: Poset,
}

/// The three order-continuity conditions, each evaluated by its own
/// route, with least failing pairs as witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityReport {
    /// For each `p ≰ q` there are opens `U ∋ p`, `V ∋ q` with `r ≰ s`
    /// for all `r ∈ U`, `s ∈ V`.
    pub separation: bool,
    pub separation_witness: Option<(usize, usize)>,
    /// The order graph is a closed subset of the square of the space.
    pub order_closed: bool,
    pub closure_witness: Option<(usize, usize)>,
    /// For each `p ≰ q` there are disjoint opens `U ∋ p` upward and
    /// `V ∋ q` downward.
    pub cone_separation: bool,
    pub cone_witness: Option<(usize, usize)>,
}

impl ContinuityReport {
    pub fn all(&self) -> bool {
        self.separation && self.order_closed && self.cone_separation
    }

    pub fn agree(&self) -> bool {
        self.separation == self.order_closed && self.order_closed == self.cone_separation
    }
}

impl MinNbhds {
    /// Neighborhood map of the topology generated by `subbasis`: the
    /// minimal open neighborhood of `x` is the intersection of the
    /// subbasic sets containing `x` (the whole space if there are none).
    pub fn from_subbasis(k: usize, subbasis: &[PointSet]) -> MinNbhds {
        let full = PointSet::full(k);
        let mut nbhds = vec![full; k];
        for s in subbasis {
            for x in 0..k {
                if s.contains(x) {
                    nbhds[x] = nbhds[x].intersect(*s);
                }
            }
        }
        MinNbhds { k, nbhds }
    }

    pub fn from_space(space: &FinSpace) -> MinNbhds {
        MinNbhds::from_subbasis(space.k, &space.opens)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nbhd(&self, x: usize) -> PointSet {
        self.nbhds[x]
    }

    pub fn nbhds(&self) -> &[PointSet] {
        &self.nbhds
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.nbhds[x].is_subset(s))
    }

    /// The family of minimal neighborhoods, deduplicated: the unique
    /// minimal basis of the topology.
    pub fn minimal_basis(&self) -> Vec<PointSet> {
        let mut basis = self.nbhds.clone();
        canonicalize_family(&mut basis);
        basis
    }

    /// Two generated topologies on the same points coincide exactly
    /// when their neighborhood maps do.
    pub fn same_topology(&self, other: &MinNbhds) -> bool {
        self.k == other.k && self.nbhds == other.nbhds
    }

    /// A bijection between finite spaces is a homeomorphism exactly
    /// when it maps minimal neighborhoods to minimal neighborhoods.
    pub fn homeomorphic_by(&self, other: &MinNbhds, map: &[usize]) -> Result<bool> {
        check_bijection(map, self.k, other.k)?;
        Ok((0..self.k).all(|x| {
            let image: PointSet = self.nbhds[x].iter().map(|p| map[p]).collect();
            image == other.nbhds[map[x]]
        }))
    }

    /// Materializes the full open family: all unions of minimal
    /// neighborhoods, found by closure under single-element extension.
    pub fn materialize(&self, max_opens: usize) -> Result<FinSpace> {
        let basis = self.minimal_basis();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut queue: Vec<PointSet> = vec![PointSet::EMPTY];
        seen.insert(0);
        while let Some(open) = queue.pop() {
            for b in &basis {
                let bigger = open.union(*b);
                if seen.insert(bigger.mask()) {
                    if seen.len() > max_opens {
                        return capacity_err(format!(
                            "topology on {} points exceeds {} open sets",
                            self.k, max_opens
                        ));
                    }
                    queue.push(bigger);
                }
            }
        }
        let mut opens: Vec<PointSet> = seen.into_iter().map(PointSet::from_mask).collect();
        canonicalize_family(&mut opens);
        Ok(FinSpace { k: self.k, opens })
    }
}

impl FinSpace {
    pub fn discrete(k: usize) -> FinSpace {
        let subbasis: Vec<PointSet> = (0..k).map(PointSet::singleton).collect();
        MinNbhds::from_subbasis(k, &subbasis)
            .materialize(usize::MAX)
            .expect("no cap")
    }

    pub fn indiscrete(k: usize) -> FinSpace {
        let mut opens = vec![PointSet::EMPTY, PointSet::full(k)];
        canonicalize_family(&mut opens);
        FinSpace { k, opens }
    }

    /// Smallest topology containing `subbasis`.
    pub fn generate(k: usize, subbasis: &[PointSet], max_opens: usize) -> Result<FinSpace> {
        if k > MAX_POINTS {
            return capacity_err(format!("space on {} points exceeds {}", k, MAX_POINTS));
        }
        let full = PointSet::full(k);
        for s in subbasis {
            if !s.is_subset(full) {
                return input_err(format!("subbasic set {:?} not within 0..{}", s, k));
            }
        }
        MinNbhds::from_subbasis(k, subbasis).materialize(max_opens)
    }

    /// Validates an explicitly given family as a topology.
    pub fn from_opens(k: usize, mut opens: Vec<PointSet>) -> Result<FinSpace> {
        if k > MAX_POINTS {
            return capacity_err(format!("space on {} points exceeds {}", k, MAX_POINTS));
        }
        let full = PointSet::full(k);
        for o in &opens {
            if !o.is_subset(full) {
                return input_err(format!("open set {:?} not within 0..{}", o, k));
            }
        }
        canonicalize_family(&mut opens);
        let present: HashSet<u64> = opens.iter().map(|o| o.mask()).collect();
        if !present.contains(&0) {
            return input_err("family does not contain the empty set");
        }
        if !present.contains(&full.mask()) {
            return input_err("family does not contain the full point set");
        }
        for a in &opens {
            for b in &opens {
                if !present.contains(&a.union(*b).mask()) {
                    return input_err(format!("family not closed under union: {:?} ∪ {:?}", a, b));
                }
                if !present.contains(&a.intersect(*b).mask()) {
                    return input_err(format!(
                        "family not closed under intersection: {:?} ∩ {:?}",
                        a, b
                    ));
                }
            }
        }
        Ok(FinSpace { k, opens })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed_set(&self, s: PointSet) -> Result<bool> {
        if !s.is_subset(PointSet::full(self.k)) {
            return input_err(format!("set {:?} not within 0..{}", s, self.k));
        }
        Ok(self.is_open(s.complement(self.k)))
    }

    pub fn min_nbhds(&self) -> MinNbhds {
        MinNbhds::from_space(self)
    }

    /// The unique minimal basis: minimal neighborhoods, deduplicated.
    pub fn minimal_basis(&self) -> Vec<PointSet> {
        self.min_nbhds().minimal_basis()
    }

    /// T1 and Hausdorff checks. On finite spaces the minimal
    /// neighborhoods decide both: `x` separates from `y` iff
    /// `y ∉ U_x`, and disjoint neighborhoods exist iff `U_x ∩ U_y = ∅`.
    pub fn separation(&self) -> SeparationReport {
        let nb = self.min_nbhds();
        let mut t1 = true;
        let mut hausdorff = true;
        let mut witness = None;
        'outer: for x in 0..self.k {
            for y in 0..self.k {
                if x != y && !nb.nbhd(x).is_disjoint(nb.nbhd(y)) {
                    hausdorff = false;
                    witness = Some((x, y));
                    break 'outer;
                }
            }
        }
        for x in 0..self.k {
            for y in 0..self.k {
                if x != y && nb.nbhd(x).contains(y) {
                    t1 = false;
                }
            }
        }
        SeparationReport { t1, hausdorff, witness }
    }

    /// Tychonoff power: points are functions `exponent → X` encoded in
    /// little-endian mixed radix, topology generated by the cylinder
    /// sets `π_i^{-1}(U)`.
    pub fn product(&self, exponent: u32, max_points: u64, max_opens: usize) -> Result<FinSpace> {
        let points = (self.k as u128).checked_pow(exponent).unwrap_or(u128::MAX);
        if points > max_points as u128 {
            return capacity_err(format!(
                "product space on {}^{} points exceeds cap {}",
                self.k, exponent, max_points
            ));
        }
        if points > MAX_POINTS as u128 {
            return capacity_err(format!(
                "product space on {}^{} points exceeds the {}-point backing",
                self.k, exponent, MAX_POINTS
            ));
        }
        let points = points as usize;
        let mut subbasis = Vec::new();
        for i in 0..exponent {
            let stride = (self.k as u64).pow(i) as usize;
            for open in &self.opens {
                let cylinder: PointSet = (0..points)
                    .filter(|id| open.contains(id / stride % self.k))
                    .collect();
                subbasis.push(cylinder);
            }
        }
        FinSpace::generate(points, &subbasis, max_opens)
    }

    /// Coordinate `i` of a product-space point id.
    pub fn digit(k: usize, id: usize, i: u32) -> usize {
        id / k.pow(i) % k
    }

    /// Trace topology on `s`, with the embedding of new indices back
    /// into this space's points.
    pub fn subspace(&self, s: PointSet) -> Result<(FinSpace, Vec<usize>)> {
        if !s.is_subset(PointSet::full(self.k)) {
            return input_err(format!("subspace set {:?} not within 0..{}", s, self.k));
        }
        let embedding = s.to_vec();
        let mut traces: Vec<PointSet> = self
            .opens
            .iter()
            .map(|o| {
                embedding
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| o.contains(p))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        canonicalize_family(&mut traces);
        Ok((FinSpace { k: embedding.len(), opens: traces }, embedding))
    }
}

/// True homeomorphism check on explicit spaces: images of opens are
/// open and preimages of opens are open. Returns the first failing
/// open set as a witness.
pub struct HomeoCheck {
    pub homeomorphism: bool,
    /// `(true, o)`: image of `o` not open in the codomain;
    /// `(false, o)`: preimage of `o` not open in the domain.
    pub witness: Option<(bool, PointSet)>,
}

pub fn verify_homeomorphism(x: &FinSpace, y: &FinSpace, map: &[usize]) -> Result<HomeoCheck> {
    check_bijection(map, x.k, y.k)?;
    let y_opens: HashSet<u64> = y.opens.iter().map(|o| o.mask()).collect();
    let x_opens: HashSet<u64> = x.opens.iter().map(|o| o.mask()).collect();
    for o in &x.opens {
        let image: PointSet = o.iter().map(|p| map[p]).collect();
        if !y_opens.contains(&image.mask()) {
            return Ok(HomeoCheck { homeomorphism: false, witness: Some((true, *o)) });
        }
    }
    for o in &y.opens {
        let preimage: PointSet = (0..x.k).filter(|&p| o.contains(map[p])).collect();
        if !x_opens.contains(&preimage.mask()) {
            return Ok(HomeoCheck { homeomorphism: false, witness: Some((false, *o)) });
        }
    }
    Ok(HomeoCheck { homeomorphism: true, witness: None })
}

fn check_bijection(map: &[usize], from: usize, to: usize) -> Result<()> {
    if map.len() != from || from != to {
        return input_err(format!(
            "map of length {} is not a bijection between {} and {} points",
            map.len(),
            from,
            to
        ));
    }
    let mut seen = PointSet::EMPTY;
    for &v in map {
        if v >= to || seen.contains(v) {
            return input_err("map is not a bijection");
        }
        seen.insert(v);
    }
    Ok(())
}

impl OrderedSpace {
    pub fn new(space: FinSpace, order: Poset) -> Result<OrderedSpace> {
        if space.k != order.n() {
            return input_err(format!(
                "space has {} points but order has {} elements",
                space.k,
                order.n()
            ));
        }
        Ok(OrderedSpace { space, order })
    }
}

/// The topology generated by the complements of cones: subbasic sets
/// `{r : r ≰ x}` and `{r : r ≱ x}` for each `x`. Reading the complement
/// notation the other way (`{r : x ≰ r}`) swaps the two families and
/// leaves their union unchanged, so the generated topology does not
/// depend on the reading.
pub fn pots_topology(order: &Poset, max_opens: usize) -> Result<OrderedSpace> {
    let space = MinNbhds::from_subbasis(order.n(), &pots_subbasis(order)).materialize(max_opens)?;
    OrderedSpace::new(space, order.clone())
}

pub fn pots_subbasis(order: &Poset) -> Vec<PointSet> {
    let mut subbasis = Vec::with_capacity(2 * order.n());
    for x in 0..order.n() {
        subbasis.push(order.not_below(x));
    }
    for x in 0..order.n() {
        subbasis.push(order.not_above(x));
    }
    subbasis
}

/// Evaluates the three continuity conditions, each by its own route:
/// open-pair separation through minimal neighborhoods, pointwise
/// closure of the order graph in the square, and least upward/downward
/// open hulls.
pub fn is_continuous_pots(s: &OrderedSpace) -> ContinuityReport {
    let k = s.space.k;
    let order = &s.order;
    let nb = s.space.min_nbhds();

    // (a) Any witnessing pair of opens shrinks to the minimal
    // neighborhoods, so those are the only candidates to test.
    let mut separation = true;
    let mut separation_witness = None;
    'a: for p in 0..k {
        for q in 0..k {
            if !order.le(p, q) {
                let bad = nb
                    .nbhd(p)
                    .iter()
                    .any(|r| nb.nbhd(q).iter().any(|t| order.le(r, t)));
                if bad {
                    separation = false;
                    separation_witness = Some((p, q));
                    break 'a;
                }
            }
        }
    }

    // (b) Pointwise closure: (p,q) is in the closure of the order graph
    // iff the basic box U_p × U_q meets the graph.
    let graph: Vec<(usize, usize)> = order.pairs();
    let mut order_closed = true;
    let mut closure_witness = None;
    'b: for p in 0..k {
        for q in 0..k {
            let in_closure = graph
                .iter()
                .any(|&(r, t)| nb.nbhd(p).contains(r) && nb.nbhd(q).contains(t));
            if in_closure && !order.le(p, q) {
                order_closed = false;
                closure_witness = Some((p, q));
                break 'b;
            }
        }
    }

    // (c) The least open upward set containing p and the least open
    // downward set containing q; disjoint witnesses exist iff these do
    // not meet.
    let up_hull: Vec<PointSet> = (0..k).map(|p| open_hull(&nb, order, p, true)).collect();
    let down_hull: Vec<PointSet> = (0..k).map(|q| open_hull(&nb, order, q, false)).collect();
    let mut cone_separation = true;
    let mut cone_witness = None;
    'c: for p in 0..k {
        for q in 0..k {
            if !order.le(p, q) && !up_hull[p].is_disjoint(down_hull[q]) {
                cone_separation = false;
                cone_witness = Some((p, q));
                break 'c;
            }
        }
    }

    ContinuityReport {
        separation,
        separation_witness,
        order_closed,
        closure_witness,
        cone_separation,
        cone_witness,
    }
}

// Least set containing `start` that is open and upward (or downward).
fn open_hull(nb: &MinNbhds, order: &Poset, start: usize, upward: bool) -> PointSet {
    let mut hull = PointSet::singleton(start);
    loop {
        let mut next = hull;
        for x in hull.iter() {
            next = next.union(nb.nbhd(x));
            next = next.union(if upward { order.upper_cone(x) } else { order.lower_cone(x) });
        }
        if next == hull {
            return hull;
        }
        hull = next;
    }
}
