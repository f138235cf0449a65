use compcs_core::composites::*;
use compcs_core::constituents::*;
use compcs_core::kernel::{cz, hadamard, swap};
use compcs_core::{ExactScalar, Tensor};

fn all_structures() -> Vec<CompositeCS> {
    let mut v = enumerate_composites(2);
    v.extend(enumerate_composites(3));
    v
}

fn overlap_sqr(a: &Tensor, b: &Tensor) -> ExactScalar {
    let s = a.entries().iter().zip(b.entries()).fold(ExactScalar::ZERO, |acc, (x, y)| acc + x.conj() * *y);
    s * s.conj()
}

#[test]
fn every_basis_is_orthonormal() {
    let all = all_structures();
    assert_eq!(all.len(), 234);
    for cs in &all {
        let b = underlying_basis(cs);
        assert!(b.is_orthonormal(), "{}", cs);
        for (i, v) in b.kets.iter().enumerate() {
            for (j, w) in b.kets.iter().enumerate() {
                let want = if i == j { ExactScalar::ONE } else { ExactScalar::ZERO };
                assert_eq!(overlap_sqr(v, w), want, "{} {} {}", cs, i, j);
            }
        }
    }
}

#[test]
fn edges_have_flat_overlaps() {
    for n in [2, 3] {
        let vs = enumerate_composites(n);
        let bases: Vec<Basis> = vs.iter().map(underlying_basis).collect();
        let target = ExactScalar::pow2_inv(n as u32);
        let mut edges = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !unbiased(&bases[i], &bases[j]) {
                    continue;
                }
                edges += 1;
                for v in &bases[i].kets {
                    for w in &bases[j].kets {
                        assert_eq!(overlap_sqr(v, w), target);
                    }
                }
            }
        }
        assert_eq!(edges, if n == 2 { 85 } else { 10_856 });
    }
}

#[test]
fn kets_are_copied() {
    for cs in &all_structures() {
        let b = underlying_basis(cs);
        let copy = b.spider(1, 2).unwrap();
        let erase = b.spider(1, 0).unwrap();
        for v in &b.kets {
            assert!(v.then(&copy).is_proportional(&v.kron(v)).unwrap(), "{}", cs);
            assert!(!v.then(&erase).is_zero());
        }
    }
}

#[test]
fn composite_spiders_fuse() {
    for cs in &enumerate_composites(2) {
        for (m, k, n) in [(1, 1, 1), (2, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 1), (3, 1, 1), (1, 1, 3)] {
            let a = composite_spider(cs, m, k).unwrap();
            let b = composite_spider(cs, k, n).unwrap();
            assert!(a.then(&b).is_proportional(&composite_spider(cs, m, n).unwrap()).unwrap(), "{} {} {} {}", cs, m, k, n);
        }
    }
    for label in ["ZZX:13,23", "XYZ:12,13,23", "YYY:12"] {
        let cs = CompositeCS::parse(label).unwrap();
        let a = composite_spider(&cs, 2, 1).unwrap();
        let b = composite_spider(&cs, 1, 1).unwrap();
        assert!(a.then(&b).is_proportional(&composite_spider(&cs, 2, 1).unwrap()).unwrap());
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..(1usize << n) - 1).map(move |m| (0..n).filter(|q| m >> q & 1 == 1).collect())
}

#[test]
fn cuts_follow_the_wires() {
    for cs in &all_structures() {
        let b = underlying_basis(cs);
        for s in subsets(cs.n()) {
            let crossing = cs.wires().iter().any(|&(p, q)| s.contains(&p) != s.contains(&q));
            for v in &b.kets {
                assert_eq!(bipartition_matrix(v, &s).is_rank_one(), !crossing, "{} {:?}", cs, s);
            }
        }
        let class = entanglement_class(cs);
        let product = subsets(cs.n()).all(|s| bipartition_matrix(&b.kets[0], &s).is_rank_one());
        let entangled = subsets(cs.n()).all(|s| !bipartition_matrix(&b.kets[0], &s).is_rank_one());
        assert_eq!(class == EntClass::SC, product);
        assert_eq!(class == EntClass::NS, entangled);
    }
}

fn cd_agrees(a: &Basis, b: &Basis) -> bool {
    cd_matrix_bases(a, b).is_rank_one() == unbiased(a, b)
}

#[test]
fn cd_rank_one_iff_unbiased_two_qubits() {
    let vs = enumerate_composites(2);
    let bases: Vec<Basis> = vs.iter().map(underlying_basis).collect();
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            assert!(cd_agrees(&bases[i], &bases[j]), "{} {}", vs[i], vs[j]);
        }
    }
}

#[test]
fn cd_rank_one_iff_unbiased_three_qubits() {
    let vs = enumerate_composites(3);
    let bases: Vec<Basis> = vs.iter().map(underlying_basis).collect();
    let mut checked = 0;
    for i in 0..vs.len() {
        for j in (i + 1..vs.len()).filter(|j| (i * 31 + j) % 23 == 0) {
            assert!(cd_agrees(&bases[i], &bases[j]), "{} {}", vs[i], vs[j]);
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn cd_of_single_qubit_constituents() {
    for a in Constituent::ALL {
        for b in Constituent::ALL {
            let ba = Basis { kets: constituent_basis(a).to_vec() };
            let bb = Basis { kets: constituent_basis(b).to_vec() };
            assert_eq!(cd_matrix_bases(&ba, &bb).is_rank_one(), a != b);
        }
    }
}

#[test]
fn leg_cz_swaps_the_wired_z_pair() {
    let zz = CompositeCS::parse("ZZ:12").unwrap();
    let xx = underlying_basis(&CompositeCS::parse("XX").unwrap());
    let decorated = compose_cz_on_legs(&zz, 0, 1);
    for s in 0..4 {
        let swapped = (s >> 1) | ((s & 1) << 1);
        assert!(decorated.kets[s].is_proportional(&xx.kets[swapped]).unwrap());
        let direct = Tensor::basis_ket(2, s).then(&cz()).then(&swap()).then(&hadamard().kron(&hadamard()));
        assert!(decorated.kets[s].is_proportional(&direct).unwrap());
    }
}

#[test]
fn metric_diagrams() {
    for cs in &enumerate_composites(2) {
        let b = underlying_basis(cs);
        assert_eq!(metric_diagram(&b, &b), Tensor::identity(2));
    }
    let zz = underlying_basis(&CompositeCS::parse("ZZ").unwrap());
    let decorated = compose_cz_on_legs(&CompositeCS::parse("ZZ").unwrap(), 0, 1);
    assert!(metric_diagram(&zz, &decorated).is_proportional(&cz()).unwrap());
}

#[test]
fn complementarity_ignores_a_shared_frame() {
    let vs = enumerate_composites(2);
    for a in &vs {
        let u = leg_network(a).dagger();
        for b in &vs {
            let (ba, bb) = (underlying_basis(a), underlying_basis(b));
            let (sa, sb) = (ba.map(&u), bb.map(&u));
            assert_eq!(unbiased(&sa, &sb), is_complementary(a, b));
            assert_eq!(cd_matrix_bases(&sa, &sb).is_rank_one(), cd_matrix_bases(&ba, &bb).is_rank_one());
        }
    }
}

#[test]
fn constituent_spiders_fuse() {
    for c in Constituent::ALL {
        for m in 0..=3 {
            for n in 0..=3 {
                for k in 1..=2 {
                    if m + k > 4 || k + n > 4 || m + n == 0 {
                        continue;
                    }
                    let a = constituent_spider(c, m, k).unwrap();
                    let b = constituent_spider(c, k, n).unwrap();
                    assert!(a.then(&b).is_proportional(&constituent_spider(c, m, n).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn y_spider_from_cz_cascades() {
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n == 0 {
                assert!(y_spider_via_cz(0, 0).is_err());
                continue;
            }
            let t = y_spider_via_cz(m, n).unwrap();
            assert!(t.is_proportional(&constituent_spider(Constituent::Y, m, n).unwrap()).unwrap(), "{} {}", m, n);
        }
    }
}

#[test]
fn constituents_are_pairwise_unbiased() {
    for a in Constituent::ALL {
        for b in Constituent::ALL {
            let o = overlaps(a, b);
            if a == b {
                assert_eq!(o, vec![ExactScalar::ONE, ExactScalar::ZERO, ExactScalar::ZERO, ExactScalar::ONE]);
            } else {
                assert!(o.iter().all(|x| *x == ExactScalar::HALF));
            }
        }
    }
}

#[test]
fn cups_from_conjugate_pairs() {
    let cup = Tensor::ket(&[ExactScalar::ONE, ExactScalar::ZERO, ExactScalar::ZERO, ExactScalar::ONE]);
    let z = compcs_core::kernel::phase_gate(2);
    for c in Constituent::ALL {
        let kets = constituent_basis(c);
        let paired = kets.iter().map(|v| v.kron(&conj(v))).reduce(|a, b| a.add(&b).unwrap()).unwrap();
        assert_eq!(paired, cup);
        let spider = constituent_spider(c, 0, 2).unwrap();
        let expected = if c == Constituent::Y { cup.then(&Tensor::identity(1).kron(&z)) } else { cup.clone() };
        assert_eq!(spider, expected, "{}", c);
    }
}

fn conj(v: &Tensor) -> Tensor {
    Tensor::from_entries(v.ins(), v.outs(), v.entries().iter().map(|x| x.conj()).collect())
}
