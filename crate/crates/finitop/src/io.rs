//! JSON document schemas for every external surface.
//!
//! Orders travel as `{"n", "pairs", "labels"?, "closed"?}`. Reflexive
//! loops never need to be listed; when `closed` is false or absent the
//! loader takes the reflexive-transitive closure, and when it is true
//! the loader verifies the pairs are already transitively closed.

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::ideal::IdealFamily;
use crate::mahavier::MahavierProduct;
use crate::order::{Poset, Preorder, QuotientResult};
use crate::pointset::PointSet;
use crate::relation::{SetRelation, VRelationReport};
use crate::topology::{ContinuityReport, FinSpace, OrderedSpace, SeparationReport};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PreorderDoc {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed: Option<bool>,
}

impl PreorderDoc {
    pub fn to_preorder(&self) -> Result<Preorder> {
        let mut q = Preorder::from_pairs(self.n, &self.pairs)?;
        if self.closed == Some(true) {
            let declared: Vec<(usize, usize)> =
                self.pairs.iter().copied().filter(|(p, r)| p != r).collect();
            let mut actual = q.proper_pairs();
            actual.retain(|pair| !declared.contains(pair));
            if !actual.is_empty() {
                return input_err(format!(
                    "pairs declared closed but the closure adds {:?}",
                    actual[0]
                ));
            }
        }
        if let Some(labels) = &self.labels {
            q.set_labels(labels.clone())?;
        }
        Ok(q)
    }

    pub fn to_poset(&self) -> Result<Poset> {
        Poset::try_from_preorder(self.to_preorder()?)
    }

    pub fn from_preorder(q: &Preorder) -> PreorderDoc {
        PreorderDoc {
            n: q.n(),
            pairs: q.proper_pairs(),
            labels: q.labels().map(|ls| ls.to_vec()),
            closed: Some(true),
        }
    }

    pub fn from_poset(p: &Poset) -> PreorderDoc {
        PreorderDoc::from_preorder(p.as_preorder())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDoc {
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl RelationDoc {
    pub fn to_relation(&self) -> Result<SetRelation> {
        SetRelation::from_pairs(self.m, &self.pairs)
    }

    pub fn from_relation(f: &SetRelation) -> RelationDoc {
        RelationDoc { m: f.m(), pairs: f.pairs() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub k: usize,
    pub opens: Vec<Vec<usize>>,
}

impl SpaceDoc {
    pub fn to_space(&self) -> Result<FinSpace> {
        let opens: Vec<PointSet> = self
            .opens
            .iter()
            .map(|o| {
                if o.iter().any(|&p| p >= self.k) {
                    input_err(format!("open set {:?} out of range for k={}", o, self.k))
                } else {
                    Ok(o.iter().copied().collect())
                }
            })
            .collect::<Result<_>>()?;
        FinSpace::from_opens(self.k, opens)
    }

    pub fn from_space(x: &FinSpace) -> SpaceDoc {
        SpaceDoc {
            k: x.k(),
            opens: x.opens().iter().map(|o| o.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderedSpaceDoc {
    pub space: SpaceDoc,
    pub order: PreorderDoc,
}

impl OrderedSpaceDoc {
    pub fn to_ordered_space(&self) -> Result<OrderedSpace> {
        OrderedSpace::new(self.space.to_space()?, self.order.to_poset()?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuotientDoc {
    pub quotient: PreorderDoc,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl QuotientDoc {
    pub fn from_result(r: &QuotientResult) -> QuotientDoc {
        QuotientDoc {
            quotient: PreorderDoc::from_poset(&r.quotient),
            class_of: r.class_of.clone(),
            classes: r.classes.iter().map(|c| c.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub poset: PreorderDoc,
    pub ideals: Vec<Vec<usize>>,
}

impl FamilyDoc {
    pub fn from_family(f: &IdealFamily) -> FamilyDoc {
        FamilyDoc {
            poset: PreorderDoc::from_poset(f.poset()),
            ideals: f.ideals().iter().map(|a| a.to_vec()).collect(),
        }
    }
}

/// Input for building a constraint product.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductInputDoc {
    pub x: usize,
    pub f: RelationDoc,
    pub q: PreorderDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductDoc {
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "Q")]
    pub q: PreorderDoc,
    pub elements: Vec<Vec<u8>>,
}

impl ProductDoc {
    pub fn from_product(m: &MahavierProduct) -> ProductDoc {
        ProductDoc {
            x: m.x_size(),
            q: PreorderDoc::from_preorder(m.index_order()),
            elements: m.elements().to_vec(),
        }
    }
}

/// Input for the relation axiom check: either a bare relation
/// (checked against the discrete topology) or a relation paired with
/// an explicit space.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RelationCheckDoc {
    WithSpace { f: RelationDoc, space: SpaceDoc },
    Bare(RelationDoc),
}

impl RelationCheckDoc {
    pub fn into_parts(self) -> Result<(SetRelation, Option<FinSpace>)> {
        match self {
            RelationCheckDoc::Bare(f) => Ok((f.to_relation()?, None)),
            RelationCheckDoc::WithSpace { f, space } => {
                Ok((f.to_relation()?, Some(space.to_space()?)))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeparationDoc {
    pub t1: bool,
    pub hausdorff: bool,
    pub witness: Option<(usize, usize)>,
}

impl SeparationDoc {
    pub fn from_report(r: &SeparationReport) -> SeparationDoc {
        SeparationDoc { t1: r.t1, hausdorff: r.hausdorff, witness: r.witness }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VReportDoc {
    pub closed: bool,
    pub idempotent: bool,
    pub surjective: bool,
    pub serial: bool,
    pub v_relation: bool,
}

impl VReportDoc {
    pub fn from_report(r: &VRelationReport) -> VReportDoc {
        VReportDoc {
            closed: r.closed,
            idempotent: r.idempotent,
            surjective: r.surjective,
            serial: r.serial,
            v_relation: r.is_v_relation(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContinuityDoc {
    pub separation: bool,
    pub order_closed: bool,
    pub cone_separation: bool,
    pub agree: bool,
    pub continuous: bool,
    pub separation_witness: Option<(usize, usize)>,
    pub closure_witness: Option<(usize, usize)>,
    pub cone_witness: Option<(usize, usize)>,
}

impl ContinuityDoc {
    pub fn from_report(r: &ContinuityReport) -> ContinuityDoc {
        ContinuityDoc {
            separation: r.separation,
            order_closed: r.order_closed,
            cone_separation: r.cone_separation,
            agree: r.agree(),
            continuous: r.all(),
            separation_witness: r.separation_witness,
            closure_witness: r.closure_witness,
            cone_witness: r.cone_witness,
        }
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed JSON: {}", e)))
}

pub fn render<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}
