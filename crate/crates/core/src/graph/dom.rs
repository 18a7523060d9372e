//! Dominating vertices of the full enhanced power graph, predicted from group
//! structure rather than read off the graph.

use serde::Serialize;

use crate::error::Result;
use crate::group::{nilpotent_profile, p_parts, Elem, FactorClass, FiniteGroup, NilpotentProfile};

/// `g` dominates iff for every prime `p | o(g)` the Sylow p-subgroup is cyclic
/// or generalized quaternion and the p-part `g_p` is central (it lies in the
/// Sylow subgroup by construction). The identity always dominates.
pub fn costanzo_dominating_vertices(g: &FiniteGroup) -> Result<Vec<Elem>> {
    let profile = nilpotent_profile(g)?;
    let center = g.center();
    let mut is_central = vec![false; g.order()];
    for z in center {
        is_central[z] = true;
    }
    Ok(g.elements()
        .filter(|&x| {
            p_parts(g, x).into_iter().all(|(p, xp)| {
                let factor = profile.factor(p).expect("prime divides |G|");
                matches!(factor.class, FactorClass::Cyclic | FactorClass::GeneralizedQuaternion)
                    && is_central[xp]
                    && factor.elements.binary_search(&xp).is_ok()
            })
        })
        .collect())
}

/// Structural shape of a nilpotent group `G_1 x Z_n x Q_{2^k}`, where `G_1`
/// collects the factors that are neither cyclic nor quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryCase {
    /// `G = G_1`: only the identity dominates.
    G1Only,
    /// `G = G_1 x Z_n`: the elements `(e, x)`.
    G1TimesCyclic,
    /// `G = G_1 x Q`: the identity and `(e, y)` for the involution `y` of `Q`.
    G1TimesQuaternion,
    /// `G = G_1 x Z_n x Q`: `(e, x, e'')` and `(e, x, y)`.
    G1TimesCyclicTimesQuaternion,
}

impl CorollaryCase {
    pub fn of(profile: &NilpotentProfile) -> Self {
        match (profile.has_cyclic_part(), profile.has_quaternion()) {
            (false, false) => CorollaryCase::G1Only,
            (true, false) => CorollaryCase::G1TimesCyclic,
            (false, true) => CorollaryCase::G1TimesQuaternion,
            (true, true) => CorollaryCase::G1TimesCyclicTimesQuaternion,
        }
    }
}

/// The dominating set predicted by the four-case classification, realised
/// as explicit elements of `g`.
pub fn corollary_dom_prediction(profile: &NilpotentProfile, g: &FiniteGroup) -> Result<Vec<Elem>> {
    // The unique involution of the quaternion factor.
    let y = profile
        .factors()
        .iter()
        .find(|f| f.class == FactorClass::GeneralizedQuaternion)
        .map(|f| {
            *f.elements
                .iter()
                .find(|&&x| g.elem_order(x) == 2)
                .expect("quaternion factor has an involution")
        });
    let class_of = |p: u64| profile.factor(p).map(|f| f.class);
    // Coordinates of x: its G_1 part, its cyclic part, its quaternion part.
    let g1_part_trivial = |x: Elem| {
        p_parts(g, x)
            .into_iter()
            .all(|(p, _)| class_of(p) != Some(FactorClass::Neither))
    };
    let q_part = |x: Elem| {
        p_parts(g, x)
            .into_iter()
            .find(|&(p, _)| class_of(p) == Some(FactorClass::GeneralizedQuaternion))
            .map_or(g.identity(), |(_, xq)| xq)
    };
    let cyclic_part_trivial = |x: Elem| {
        p_parts(g, x)
            .into_iter()
            .all(|(p, _)| class_of(p) != Some(FactorClass::Cyclic))
    };

    let pred: Box<dyn Fn(Elem) -> bool> = match CorollaryCase::of(profile) {
        CorollaryCase::G1Only => Box::new(|x| x == g.identity()),
        CorollaryCase::G1TimesCyclic => Box::new(g1_part_trivial),
        CorollaryCase::G1TimesQuaternion => Box::new(|x| {
            g1_part_trivial(x) && cyclic_part_trivial(x) && {
                let q = q_part(x);
                q == g.identity() || Some(q) == y
            }
        }),
        CorollaryCase::G1TimesCyclicTimesQuaternion => {
            // D_1 = {(e, x, e'')}, D_2 = {(e, x, y)}.
            Box::new(|x| {
                let q = q_part(x);
                let in_d1 = g1_part_trivial(x) && q == g.identity();
                let in_d2 = g1_part_trivial(x) && Some(q) == y;
                in_d1 || in_d2
            })
        }
    };
    Ok(g.elements().filter(|&x| pred(x)).collect())
}
