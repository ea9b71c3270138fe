//! Ring models used by the checks.

use crate::ring::{RingBuilder, RingPresentation};

/// `F2[alpha, beta] / (alpha^4, beta^2)`, truncated above degree 4.
pub fn bielliptic_base() -> RingPresentation {
    let mut b = RingBuilder::new("bielliptic");
    b.set_top_degree(Some(4));
    b.add_generator("alpha", 1).unwrap();
    b.add_generator("beta", 1).unwrap();
    b.add_power_rule("alpha", 4, Default::default()).unwrap();
    b.add_power_rule("beta", 2, Default::default()).unwrap();
    b.build().expect("base model is valid")
}

/// Cover adjunctions applied to the base, in order.
pub const BIELLIPTIC_COVERS: [(&str, &str); 4] =
    [("delta", "alpha"), ("delta'", "alpha"), ("gamma", "beta"), ("gamma'", "beta")];

/// The base model followed by the ring after each cover adjunction.
pub fn bielliptic_tower() -> Vec<RingPresentation> {
    tower_with(|ring, eps| ring.parse_element(eps).expect("base classes exist"))
}

/// Same tower with every cover split (`epsilon = 0`).
pub fn split_bielliptic_tower() -> Vec<RingPresentation> {
    tower_with(|ring, _| ring.zero())
}

fn tower_with(
    epsilon: impl Fn(&RingPresentation, &str) -> crate::ring::RingElement,
) -> Vec<RingPresentation> {
    let mut rings = vec![bielliptic_base()];
    for (name, eps) in BIELLIPTIC_COVERS {
        let last = rings.last().unwrap();
        let next = last.adjoin_cover(name, &epsilon(last, eps)).expect("cover adjunction");
        rings.push(next);
    }
    rings
}

/// `H*(S)[delta, delta', gamma, gamma'] / (delta^2 - alpha delta, ...)`,
/// truncated above degree 8.
pub fn build_bielliptic_model() -> RingPresentation {
    bielliptic_tower().pop().unwrap()
}

/// `F2[lambda] / (lambda^2)` with `lambda` in degree `2c - 2`, killed by every
/// positive square. `None` for `c = 1`, where the factor is the ground field.
pub fn point_class_ring(c: u32) -> Option<RingPresentation> {
    if c < 2 {
        return None;
    }
    let d = 2 * c - 2;
    let mut b = RingBuilder::new("T");
    b.set_top_degree(Some(d));
    b.add_generator("lambda", d).unwrap();
    for i in 1..=d {
        b.add_sq_entry("lambda", i, Default::default()).unwrap();
    }
    b.add_power_rule("lambda", 2, Default::default()).unwrap();
    Some(b.build().expect("point class ring is valid"))
}

/// `F2[x_1, ..., x_s]` tensored with the point-class ring of coniveau `c`.
pub fn product_with_point_class(s: usize, c: u32) -> RingPresentation {
    let v = RingPresentation::polynomial_in(s);
    match point_class_ring(c) {
        Some(t) => v.tensor(&t),
        None => v,
    }
}

/// `H*(E)` for an elliptic curve: exterior on `t1, t2`.
pub fn elliptic_curve() -> RingPresentation {
    RingPresentation::exterior("E", &["t1", "t2"])
}

/// The bielliptic model tensored with an elliptic curve.
pub fn bielliptic_times_curve() -> RingPresentation {
    build_bielliptic_model().tensor(&elliptic_curve())
}

/// Every ring the property checks sweep over.
pub fn bundled_rings() -> Vec<RingPresentation> {
    vec![
        RingPresentation::polynomial_in(4),
        build_bielliptic_model(),
        bielliptic_times_curve(),
        product_with_point_class(2, 2),
        elliptic_curve(),
    ]
}

/// The bundled bielliptic presentation file.
pub const BIELLIPTIC_RING_FILE: &str = include_str!("../../rings/bielliptic.ring");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_presentation;

    #[test]
    fn base_dimensions() {
        let s = bielliptic_base();
        let dims: Vec<usize> = (0..=5).map(|n| s.dim_in_degree(n)).collect();
        assert_eq!(dims, [1, 2, 2, 2, 1, 0]);
        let b4 = s.basis_in_degree(4).unwrap();
        assert_eq!(b4.len(), 1);
        assert_eq!(s.format_monomial(&b4[0]), "alpha^3*beta");
        assert_eq!(s.basis_in_degree(0).unwrap(), vec![crate::ring::Monomial::one()]);
        let b1: Vec<String> = s.basis_in_degree(1).unwrap().iter().map(|m| s.format_monomial(m)).collect();
        assert_eq!(b1, ["alpha", "beta"]);
    }

    #[test]
    fn model_shape() {
        let z = build_bielliptic_model();
        assert_eq!(z.top_degree(), Some(8));
        let top = z.basis_in_degree(8).unwrap();
        let names: Vec<String> = top.iter().map(|m| z.format_monomial(m)).collect();
        assert_eq!(names, ["alpha^3*beta*delta*delta'*gamma*gamma'"]);
        let d = z.generator("delta").unwrap();
        assert_eq!(&d * &d, z.parse_element("alpha*delta").unwrap());
        let a = z.generator("alpha").unwrap();
        let b = z.generator("beta").unwrap();
        assert!((&b * &b).is_zero());
        let a3b = z.parse_element("alpha^3*beta").unwrap();
        assert!(!a3b.is_zero());
        assert!((&a3b * &a).is_zero());
    }

    #[test]
    fn bundled_file_matches_builder() {
        let parsed = parse_presentation(BIELLIPTIC_RING_FILE).unwrap();
        assert_eq!(parsed, build_bielliptic_model());
        assert_eq!(parsed.id(), build_bielliptic_model().id());
        let reparsed = parse_presentation(&parsed.to_text()).unwrap();
        assert_eq!(reparsed, parsed);
    }

    #[test]
    fn point_class_is_inert() {
        let t = point_class_ring(3).unwrap();
        assert_eq!(t.generators()[0].degree, 4);
        assert!(point_class_ring(1).is_none());
        assert_eq!(product_with_point_class(3, 1), RingPresentation::polynomial_in(3));
        assert_eq!(product_with_point_class(2, 2).top_degree(), None);
    }
}
