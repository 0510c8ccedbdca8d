//! Turning `TYPE [RANK]` arguments into a group model.

use anyhow::Result;
use garside::coxeter::{CoxeterGroup, CoxeterType, DescentSource, HUGE_ORDER};
use garside::descent::DescentSet;
use garside::typeb::TypeB;
use garside::Error;

/// Type B goes through signed permutations so that full matrices come out
/// in window order; everything else uses the generic models.
pub enum Group {
    B(TypeB),
    Other(CoxeterGroup),
}

pub struct Spec {
    pub ty: CoxeterType,
    /// `B4`, `I7`, ...
    pub tag: String,
}

impl Spec {
    pub fn parse(ty: &str, rank: Option<u32>) -> Result<Self> {
        let has_digits = ty.chars().any(|c| c.is_ascii_digit());
        let tag = match (has_digits, rank) {
            (true, None) => ty.to_string(),
            (false, Some(r)) => format!("{ty}{r}"),
            (true, Some(_)) => {
                return Err(Error::Parse(format!("{ty:?} already carries its rank")).into());
            }
            (false, None) => return Err(Error::Parse(format!("{ty:?} needs a rank")).into()),
        };
        let ty: CoxeterType = tag.to_uppercase().parse()?;
        let tag = format!("{}{}", ty.family(), ty.parameter());
        Ok(Self { ty, tag })
    }

    pub fn family(&self) -> String {
        self.ty.family().to_string()
    }

    pub fn order(&self) -> Option<u128> {
        self.ty.group_order()
    }

    /// Builds the model. Groups above the enumeration limit are refused
    /// when their elements are first needed, unless `allow_huge` is set.
    pub fn build(&self, allow_huge: bool) -> Result<Group> {
        Ok(match self.ty {
            CoxeterType::B(n) => {
                match self.order() {
                    Some(order) if order <= HUGE_ORDER || allow_huge => {}
                    order => {
                        // a window of n i32 plus the vector header per element
                        let bytes = order.map(|o| o * (4 * n as u128 + 24));
                        let shown = |v: Option<u128>| v.map_or_else(|| "too many".to_string(), |v| v.to_string());
                        return Err(Error::ResourceLimit {
                            what: format!("the elements of {}", self.tag),
                            detail: format!(
                                "{} elements, about {} MiB to materialize; pass --allow-huge to override",
                                shown(order),
                                shown(bytes.map(|b| b >> 20))
                            ),
                        }
                        .into());
                    }
                }
                Group::B(TypeB::new(n))
            }
            t => Group::Other(CoxeterGroup::from_type(t)?.allow_huge(allow_huge)),
        })
    }
}

impl DescentSource for Group {
    fn rank(&self) -> usize {
        match self {
            Group::B(b) => b.n(),
            Group::Other(g) => g.rank(),
        }
    }

    fn for_each_descent_pair(&self, f: &mut dyn FnMut(DescentSet, DescentSet)) -> garside::Result<()> {
        match self {
            Group::B(b) => b.for_each_descent_pair(f),
            Group::Other(g) => g.for_each_descent_pair(f),
        }
    }

    fn descent_pairs(&self) -> garside::Result<Vec<(DescentSet, DescentSet)>> {
        match self {
            Group::B(b) => b.descent_pairs(),
            Group::Other(g) => g.descent_pairs(),
        }
    }
}
