//! Constraint products over finite index orders: the functions
//! `x: Q → X` with `x(p) ∈ f(x(q))` whenever `p ⪯ q`, as a subspace of
//! the power `X^Q`.

use std::collections::HashSet;

use crate::error::{capacity_err, input_err, Result};
use crate::ideal::{enumerate_ideals, IdealFamily};
use crate::order::{Poset, Preorder};
use crate::pointset::PointSet;
use crate::relation::SetRelation;
use crate::topology::{pots_subbasis, verify_homeomorphism, FinSpace, MinNbhds};

pub const DEFAULT_MAX_PRODUCT: u64 = 1 << 16;

/// The element list of a constraint product, in lexicographic order of
/// assignment vectors.
#[derive(Clone)]
pub struct MahavierProduct {
    x_size: usize,
    index: Preorder,
    elements: Vec<Vec<u8>>,
}

impl MahavierProduct {
    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn index_order(&self) -> &Preorder {
        &self.index
    }

    pub fn elements(&self) -> &[Vec<u8>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The subspace topology the element list inherits from the power
    /// `X^Q`, materialized on demand under the open-family guard. With
    /// no space supplied the factor is discrete.
    pub fn subspace_topology(
        &self,
        x_topology: Option<&FinSpace>,
        max_opens: usize,
    ) -> Result<FinSpace> {
        if self.elements.len() > crate::pointset::MAX_POINTS {
            return capacity_err(format!(
                "subspace topology on {} elements exceeds the {}-point backing",
                self.elements.len(),
                crate::pointset::MAX_POINTS
            ));
        }
        let subbasis = match x_topology {
            None => element_subbasis(&self.elements, self.index.n(), self.x_size),
            Some(space) => {
                if space.k() != self.x_size {
                    return input_err(format!(
                        "space has {} points but the product factor has {}",
                        space.k(),
                        self.x_size
                    ));
                }
                let mut subbasis = Vec::new();
                for coord in 0..self.index.n() {
                    for open in space.opens() {
                        subbasis.push(
                            self.elements
                                .iter()
                                .enumerate()
                                .filter(|(_, el)| open.contains(el[coord] as usize))
                                .map(|(i, _)| i)
                                .collect(),
                        );
                    }
                }
                subbasis
            }
        };
        FinSpace::generate(self.elements.len(), &subbasis, max_opens)
    }
}

/// Does `vec` satisfy `vec[p] ∈ f(vec[q])` for every `p ⪯ q`?
/// Reflexive pairs count: a value `v` with `v ∉ f(v)` is excluded.
pub fn satisfies_constraints(vec: &[u8], f: &SetRelation, q: &Preorder) -> bool {
    for p in 0..q.n() {
        for r in 0..q.n() {
            if q.le(p, r) && !f.contains(vec[r] as usize, vec[p] as usize) {
                return false;
            }
        }
    }
    true
}

fn check_product_inputs(x_size: usize, f: &SetRelation, q: &Preorder, cap: u64) -> Result<()> {
    if f.m() != x_size {
        return input_err(format!(
            "relation is on {} points but the space has {}",
            f.m(),
            x_size
        ));
    }
    if x_size > 255 {
        return capacity_err("point spaces beyond 255 points are not supported");
    }
    let search = (x_size as u128).checked_pow(q.n() as u32).unwrap_or(u128::MAX);
    if search > cap as u128 {
        return capacity_err(format!(
            "product search over {}^{} vectors exceeds cap {}",
            x_size,
            q.n(),
            cap
        ));
    }
    Ok(())
}

/// Backtracking enumeration along a linear extension of the condensed
/// index order, with forward pruning: assigning `v` at `r` restricts
/// the admissible values at every unassigned `p ⪯ r` to `f(v)` and at
/// every unassigned `p ⪰ r` to the preimage of `v`.
pub fn enumerate_product(
    x_size: usize,
    f: &SetRelation,
    q: &Preorder,
    cap: u64,
) -> Result<MahavierProduct> {
    check_product_inputs(x_size, f, q, cap)?;
    let n = q.n();

    // Variables grouped by condensation class, classes in extension order.
    let quotient = q.quotient();
    let mut var_order = Vec::with_capacity(n);
    for class in quotient.quotient.linear_extension() {
        var_order.extend(quotient.classes[class].iter());
    }

    let diag: u64 = (0..x_size)
        .filter(|&v| f.contains(v, v))
        .fold(0u64, |acc, v| acc | 1 << v);
    let preimage: Vec<u64> = (0..x_size)
        .map(|v| (0..x_size).filter(|&u| f.contains(u, v)).fold(0u64, |acc, u| acc | 1 << u))
        .collect();

    let mut elements = Vec::new();
    let mut assignment = vec![0u8; n];
    let init_domains = vec![diag; n];
    backtrack(
        q,
        f,
        &preimage,
        &var_order,
        0,
        &init_domains,
        &mut assignment,
        &mut elements,
    );
    elements.sort();
    Ok(MahavierProduct { x_size, index: q.clone(), elements })
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    q: &Preorder,
    f: &SetRelation,
    preimage: &[u64],
    var_order: &[usize],
    idx: usize,
    domains: &[u64],
    assignment: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if idx == var_order.len() {
        out.push(assignment.clone());
        return;
    }
    let var = var_order[idx];
    let mut candidates = domains[var];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let mut pruned = domains.to_vec();
        let mut dead = false;
        for &p in &var_order[idx + 1..] {
            if q.le(p, var) {
                pruned[p] &= f.image(v).mask();
            }
            if q.le(var, p) {
                pruned[p] &= preimage[v];
            }
            if pruned[p] == 0 {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        assignment[var] = v as u8;
        backtrack(q, f, preimage, var_order, idx + 1, &pruned, assignment, out);
    }
}

/// Reference enumeration: filter every vector in `X^Q` by the defining
/// constraint directly.
pub fn enumerate_product_brute(
    x_size: usize,
    f: &SetRelation,
    q: &Preorder,
    cap: u64,
) -> Result<Vec<Vec<u8>>> {
    check_product_inputs(x_size, f, q, cap)?;
    let n = q.n();
    let total = (x_size as u128).pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let vec: Vec<u8> = (0..n)
            .map(|_| {
                let digit = (c % x_size as u128) as u8;
                c /= x_size as u128;
                digit
            })
            .collect();
        if satisfies_constraints(&vec, f, q) {
            out.push(vec);
        }
    }
    out.sort();
    Ok(out)
}

/// Result of embedding a smaller product into a larger one.
#[derive(Clone, Debug)]
pub struct SubsetCheck {
    pub holds: bool,
    pub sub_cardinality: usize,
    pub super_cardinality: usize,
}

/// Verifies by double enumeration that `M(Y, g, Q)`, re-indexed into
/// `X` along `y_points`, is contained in `M(X, f, Q)`.
pub fn subset_check(
    y_points: &[usize],
    g: &SetRelation,
    x_size: usize,
    f: &SetRelation,
    q: &Preorder,
    cap: u64,
) -> Result<SubsetCheck> {
    if g.m() != y_points.len() {
        return input_err(format!(
            "restricted relation is on {} points but {} were embedded",
            g.m(),
            y_points.len()
        ));
    }
    let mut seen = HashSet::new();
    for &p in y_points {
        if p >= x_size || !seen.insert(p) {
            return input_err("embedded points must be distinct members of the space");
        }
    }
    for (a, b) in g.pairs() {
        if !f.contains(y_points[a], y_points[b]) {
            return input_err(format!(
                "({},{}) is in the restricted relation but its image ({},{}) is not in f",
                a, b, y_points[a], y_points[b]
            ));
        }
    }
    let sub = enumerate_product(y_points.len(), g, q, cap)?;
    let superset = enumerate_product(x_size, f, q, cap)?;
    let super_elems: HashSet<&Vec<u8>> = superset.elements().iter().collect();
    let holds = sub.elements().iter().all(|el| {
        let mapped: Vec<u8> = el.iter().map(|&v| y_points[v as usize] as u8).collect();
        super_elems.contains(&mapped)
    });
    Ok(SubsetCheck {
        holds,
        sub_cardinality: sub.len(),
        super_cardinality: superset.len(),
    })
}

/// Verdict on condensing the index order of `M(2, γ, Q)`.
#[derive(Clone, Debug)]
pub struct QuotientInvariance {
    /// Every element is constant on each equivalence class.
    pub well_defined: bool,
    /// The induced map onto `M(2, γ, Q*)` is a bijection.
    pub bijective: bool,
    /// And a homeomorphism of the two subspace topologies.
    pub homeomorphic: bool,
    pub source_cardinality: usize,
    pub quotient_cardinality: usize,
}

impl QuotientInvariance {
    pub fn holds(&self) -> bool {
        self.well_defined && self.bijective && self.homeomorphic
    }
}

/// Trace of the power space's cylinder subbasis on an element list:
/// one set per coordinate and value. For a discrete factor these
/// generate the subspace topology.
fn element_subbasis(elements: &[Vec<u8>], coords: usize, x_size: usize) -> Vec<PointSet> {
    let mut subbasis = Vec::new();
    for coord in 0..coords {
        for v in 0..x_size {
            subbasis.push(
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, el)| el[coord] as usize == v)
                    .map(|(i, _)| i)
                    .collect(),
            );
        }
    }
    subbasis
}

/// Condensation invariance for the two-point product with γ. This is
/// the case the theory covers; see [`quotient_comparison`] for the
/// experimental general form.
pub fn quotient_invariance(q: &Preorder, cap: u64) -> Result<QuotientInvariance> {
    let gamma = SetRelation::gamma(2, 0, 1).expect("gamma on 2 points");
    quotient_comparison(2, &gamma, q, cap)
}

/// Experimental: compares `M(X, f, Q)` with `M(X, f, Q*)` for an
/// arbitrary relation. Nothing is claimed in general: a relation that
/// relates distinct values both ways admits elements that are not
/// constant on condensation classes, and the report simply says so.
pub fn quotient_comparison(
    x_size: usize,
    f: &SetRelation,
    q: &Preorder,
    cap: u64,
) -> Result<QuotientInvariance> {
    let source = enumerate_product(x_size, f, q, cap)?;
    let quotient = q.quotient();
    let star = enumerate_product(x_size, f, quotient.quotient.as_preorder(), cap)?;
    if source.len() > crate::pointset::MAX_POINTS {
        return capacity_err(format!(
            "topology comparison on {} elements exceeds the {}-point backing",
            source.len(),
            crate::pointset::MAX_POINTS
        ));
    }

    let mut well_defined = true;
    let mut induced: Vec<Vec<u8>> = Vec::with_capacity(source.len());
    for el in source.elements() {
        let mut image = vec![0u8; quotient.classes.len()];
        for (class_idx, class) in quotient.classes.iter().enumerate() {
            let mut values = class.iter().map(|p| el[p]);
            let first = values.next().expect("classes are nonempty");
            if values.any(|v| v != first) {
                well_defined = false;
            }
            image[class_idx] = first;
        }
        induced.push(image);
    }

    let star_set: HashSet<&Vec<u8>> = star.elements().iter().collect();
    let distinct: HashSet<&Vec<u8>> = induced.iter().collect();
    let bijective = well_defined
        && distinct.len() == source.len()
        && source.len() == star.len()
        && induced.iter().all(|el| star_set.contains(el));

    let homeomorphic = if !bijective {
        false
    } else {
        let map: Vec<usize> = induced
            .iter()
            .map(|el| {
                star.elements()
                    .binary_search(el)
                    .expect("image is an element of the condensed product")
            })
            .collect();
        let points = (x_size as u128).checked_pow(q.n() as u32).unwrap_or(u128::MAX);
        if points <= 16 {
            // Small enough to materialize the ambient powers and take
            // honest traces.
            let sub_space = power_subspace(source.elements(), q.n(), x_size)?;
            let star_space = power_subspace(star.elements(), quotient.quotient.n(), x_size)?;
            verify_homeomorphism(&sub_space, &star_space, &map)?.homeomorphism
        } else {
            let nb_source = MinNbhds::from_subbasis(
                source.len(),
                &element_subbasis(source.elements(), q.n(), x_size),
            );
            let nb_star = MinNbhds::from_subbasis(
                star.len(),
                &element_subbasis(star.elements(), quotient.quotient.n(), x_size),
            );
            nb_source.homeomorphic_by(&nb_star, &map)?
        }
    };

    Ok(QuotientInvariance {
        well_defined,
        bijective,
        homeomorphic,
        source_cardinality: source.len(),
        quotient_cardinality: star.len(),
    })
}

// Subspace of a discrete power on the given element codes.
fn power_subspace(elements: &[Vec<u8>], coords: usize, x_size: usize) -> Result<FinSpace> {
    let power = FinSpace::discrete(x_size).product(coords as u32, 1 << 16, 1 << 16)?;
    let codes: PointSet = elements
        .iter()
        .map(|el| {
            el.iter()
                .enumerate()
                .map(|(i, &v)| v as usize * x_size.pow(i as u32))
                .sum::<usize>()
        })
        .collect();
    let (space, _) = power.subspace(codes)?;
    Ok(space)
}

/// The characteristic-vector bijection between an ideal family and
/// `M(2, γ, P)`, checked in both directions.
#[derive(Clone)]
pub struct HMap {
    /// Characteristic vectors aligned with the family's canonical order.
    pub vectors: Vec<Vec<u8>>,
    pub product: MahavierProduct,
    /// Position of each family member's vector in the product's order.
    pub family_to_product: Vec<usize>,
    pub bijective: bool,
}

pub fn h_map(family: &IdealFamily, cap: u64) -> Result<HMap> {
    let poset = family.poset();
    let gamma = SetRelation::gamma(2, 0, 1).expect("gamma on 2 points");
    let product = enumerate_product(2, &gamma, poset.as_preorder(), cap)?;

    let vectors: Vec<Vec<u8>> = family
        .ideals()
        .iter()
        .map(|a| (0..poset.n()).map(|p| a.contains(p) as u8).collect())
        .collect();

    let mut bijective = vectors
        .iter()
        .all(|v| satisfies_constraints(v, &gamma, poset.as_preorder()));
    // Supports of product elements land back in the family, and the two
    // compositions are identities.
    for el in product.elements() {
        let support: PointSet = el
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(p, _)| p)
            .collect();
        match family.index_of(support) {
            Some(i) => bijective &= vectors[i] == *el,
            None => bijective = false,
        }
    }
    let family_to_product: Vec<usize> = vectors
        .iter()
        .map(|v| product.elements().binary_search(v).unwrap_or(usize::MAX))
        .collect();
    bijective &= family.len() == product.len()
        && family_to_product.iter().all(|&i| i != usize::MAX);

    Ok(HMap { vectors, product, family_to_product, bijective })
}

/// Three-way topology comparison on the points of the downset space:
/// the cone topology of the family under inclusion, the topology
/// generated by all the `B⟨T,F⟩` sets, and the subspace topology the
/// characteristic vectors inherit from the power of the discrete
/// two-point space, pulled back along the bijection.
#[derive(Clone, Debug)]
pub struct ThreeTopologies {
    pub points: usize,
    /// Minimal-neighborhood maps agree pairwise (this determines the
    /// generated topologies).
    pub neighborhoods_equal: bool,
    /// Open families compared extensionally, when small enough to
    /// materialize.
    pub extensional_equal: Option<bool>,
}

impl ThreeTopologies {
    pub fn equal(&self) -> bool {
        self.neighborhoods_equal && self.extensional_equal.unwrap_or(true)
    }
}

pub fn homeomorphism_theorem(
    poset: &Poset,
    max_ideals: u64,
    max_opens: usize,
) -> Result<ThreeTopologies> {
    if poset.n() > 10 {
        return capacity_err(format!(
            "basic-set route scans 4^{} constraint pairs; refusing n > 10",
            poset.n()
        ));
    }
    let family = enumerate_ideals(poset, max_ideals)?;
    let m = family.len();
    let containment = family.containment_poset()?;

    // Route one: cone subbasis of the family ordered by inclusion.
    let cone_sub = pots_subbasis(&containment);

    // Route two: every basic set B⟨T,F⟩.
    let mut btf_sub = Vec::new();
    for t_mask in 0u64..1 << poset.n() {
        for f_mask in 0u64..1 << poset.n() {
            let t = PointSet::from_mask(t_mask);
            let f = PointSet::from_mask(f_mask);
            let members: PointSet = family.basis_btf_indices(t, f).into_iter().collect();
            btf_sub.push(members);
        }
    }

    // Route three: cylinder traces on the product elements, pulled back
    // along the characteristic-vector bijection.
    let h = h_map(&family, max_ideals.max(1 << poset.n()))?;
    if !h.bijective {
        return Ok(ThreeTopologies { points: m, neighborhoods_equal: false, extensional_equal: None });
    }
    let product_sub = element_subbasis(h.product.elements(), poset.n(), 2);
    let pulled: Vec<PointSet> = product_sub
        .iter()
        .map(|s| (0..m).filter(|&i| s.contains(h.family_to_product[i])).collect())
        .collect();

    let nb_cone = MinNbhds::from_subbasis(m, &cone_sub);
    let nb_btf = MinNbhds::from_subbasis(m, &btf_sub);
    let nb_prod = MinNbhds::from_subbasis(m, &pulled);
    let neighborhoods_equal =
        nb_cone.same_topology(&nb_btf) && nb_btf.same_topology(&nb_prod);

    let extensional_equal = if m <= 16 && (1u64 << m) <= max_opens as u64 {
        let a = nb_cone.materialize(max_opens)?;
        let b = nb_btf.materialize(max_opens)?;
        let c = nb_prod.materialize(max_opens)?;
        Some(a.opens() == b.opens() && b.opens() == c.opens())
    } else {
        None
    };

    Ok(ThreeTopologies { points: m, neighborhoods_equal, extensional_equal })
}

/// Whether these products are Corson compact when the index order is
/// uncountable is not settled; nothing here bears on it.
pub fn corson_compactness_status() -> &'static str {
    "open question — not implemented"
}

/// The image of `M(2, γ, P)` is a closed subset of the power of the
/// discrete two-point space.
pub fn closed_subspace_check(poset: &Poset, max_opens: usize) -> Result<bool> {
    if poset.n() > 4 {
        return capacity_err(format!(
            "power space on 2^{} points refused (n > 4)",
            poset.n()
        ));
    }
    let gamma = SetRelation::gamma(2, 0, 1).expect("gamma on 2 points");
    let product = enumerate_product(2, &gamma, poset.as_preorder(), 1 << 16)?;
    let power = FinSpace::discrete(2).product(poset.n() as u32, 1 << 16, max_opens)?;
    let image: PointSet = product
        .elements()
        .iter()
        .map(|el| el.iter().enumerate().map(|(i, &v)| (v as usize) << i).sum::<usize>())
        .collect();
    power.is_closed_set(image)
}
