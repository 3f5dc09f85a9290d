use proptest::prelude::*;

use qsg::catalog::{by_name, subgroup_data, sweedler4, taft, FiniteGroupTable};
use qsg::cli::SpecFile;
use qsg::correspondence::quotient_module_coalgebra;
use qsg::correspondence::CoidealSubalgebra;
use qsg::hopf::HopfAlgebra;
use qsg::linalg::echelon::{rref_dense, rref_sparse};
use qsg::linalg::solve::determinant;
use qsg::linalg::{find_section, kernel_of, Field, LinMap, SVec, Subspace};
use qsg::monadics::gamma_isomorphism;
use qsg::rep::{Comodule, Side};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

/// A matrix with small integer entries, mostly zero.
fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], rows * cols)
}

fn to_map(f: Field, rows: usize, cols: usize, cells: &[i64]) -> LinMap {
    let entries = cells
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(k, &x)| (k / cols, k % cols, f.from_i64(x)));
    LinMap::from_entries(f, rows, cols, entries).unwrap()
}

fn sized_map() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| (Just(f), Just(r), Just(c), matrix(r, c)))
}

fn catalog_hopf() -> impl Strategy<Value = HopfAlgebra> {
    prop_oneof![
        Just(by_name("kC3", &[]).unwrap()),
        Just(by_name("kS3", &[]).unwrap()),
        Just(by_name("k^S3", &[]).unwrap()),
        Just(sweedler4()),
        Just(taft(Field::Prime(7), 3, &Field::Prime(7).from_i64(2)).unwrap()),
    ]
}

fn random_element(h: &HopfAlgebra, coeffs: &[i64]) -> SVec {
    let f = h.field();
    SVec::from_pairs(
        coeffs
            .iter()
            .take(h.dim())
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, f.from_i64(c))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_is_canonical((f, r, c, cells) in sized_map(), seed in any::<u64>()) {
        let m = to_map(f, r, c, &cells);
        let rows = m.row_vectors();
        let s = Subspace::span(f, c, rows.clone());
        prop_assert_eq!(&Subspace::span(f, c, s.basis().to_vec()), &s);
        let mut shuffled = rows;
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k.max(1));
        shuffled.reverse();
        prop_assert_eq!(&Subspace::span(f, c, shuffled), &s);
    }

    #[test]
    fn rank_nullity((f, r, c, cells) in sized_map()) {
        let m = to_map(f, r, c, &cells);
        let k = kernel_of(&m);
        prop_assert_eq!(m.rank() + k.dim(), c);
        for v in k.basis() {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn sparse_and_dense_elimination_agree((f, r, c, cells) in sized_map()) {
        let rows = to_map(f, r, c, &cells).row_vectors();
        prop_assert_eq!(rref_sparse(f, rows.clone()), rref_dense(f, rows, c));
    }

    #[test]
    fn determinant_detects_rank((f, n, cells) in (field(), 1usize..5).prop_flat_map(|(f, n)| (Just(f), Just(n), matrix(n, n)))) {
        let m = to_map(f, n, n, &cells);
        prop_assert_eq!(determinant(&m).is_zero(), m.rank() < n);
        if let Some(inv) = m.inverse() {
            prop_assert!(m.compose(&inv).is_identity());
        }
    }

    #[test]
    fn kron_is_bilinear_and_multiplicative(
        f in field(),
        a in matrix(2, 3), a2 in matrix(2, 3), b in matrix(3, 2),
        c in matrix(3, 2), d in matrix(2, 3),
    ) {
        let (a, a2, b) = (to_map(f, 2, 3, &a), to_map(f, 2, 3, &a2), to_map(f, 3, 2, &b));
        prop_assert_eq!(a.add(&a2).kron(&b), a.kron(&b).add(&a2.kron(&b)));
        let (c, d) = (to_map(f, 3, 2, &c), to_map(f, 2, 3, &d));
        // (A⊗B)(C⊗D) = AC⊗BD
        prop_assert_eq!(a.kron(&b).compose(&c.kron(&d)), a.compose(&c).kron(&b.compose(&d)));
    }

    #[test]
    fn sections_split_surjections((f, r, c, cells) in sized_map()) {
        let m = to_map(f, r, c, &cells);
        // restrict the codomain to the image so the map is onto
        let img = Subspace::span(f, r, m.columns().to_vec());
        let onto = LinMap::from_columns(
            f,
            img.dim(),
            m.columns().iter().map(|v| img.coordinates(v).unwrap()).collect(),
        );
        if img.dim() > 0 {
            let s = find_section(&onto, &[]).unwrap().unwrap();
            prop_assert!(onto.compose(&s).is_identity());
        }
        if m.rank() < r {
            prop_assert!(find_section(&m, &[]).is_err());
        }
    }

    #[test]
    fn comultiplication_is_multiplicative(h in catalog_hopf(), x in prop::collection::vec(-3i64..=3, 9), y in prop::collection::vec(-3i64..=3, 9)) {
        let (a, b) = (random_element(&h, &x), random_element(&h, &y));
        let d = h.dim();
        let lhs = h.coproduct(&h.product(&a, &b));
        let tensor_square = h.mult().kron(h.mult()).compose(&LinMap::permute_legs(h.field(), &[d, d, d, d], &[0, 2, 1, 3]));
        let rhs = tensor_square.apply(&h.coproduct(&a).tensor(&h.coproduct(&b), d * d));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(h.counit().apply(&h.product(&a, &b)), h.counit().apply(&a).tensor(&h.counit().apply(&b), 1));
    }

    #[test]
    fn colinear_maps_commute_with_coactions(h in catalog_hopf(), x in prop::collection::vec(-3i64..=3, 9)) {
        let reg = Comodule::regular(Side::Right, h.coalgebra());
        let hom = reg.hom_colinear(&reg).unwrap();
        let f = h.field();
        let pick = SVec::from_pairs(
            x.iter().take(hom.dim()).enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, f.from_i64(c))),
        );
        let phi = qsg::linalg::solve::unvectorize(f, &hom.from_coordinates(&pick), h.dim(), h.dim());
        let idh = LinMap::identity(f, h.dim());
        prop_assert_eq!(reg.coaction().compose(&phi), phi.kron(&idh).compose(reg.coaction()));
    }

    #[test]
    fn gamma_inverts_for_every_seed(seed in any::<u64>()) {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        let x = Comodule::regular(Side::Right, h.coalgebra());
        let m = Comodule::regular(Side::Right, q.b());
        let g = gamma_isomorphism(&x, &m, &q, seed, 5).unwrap();
        prop_assert!(g.holds());
    }

    #[test]
    fn spec_text_roundtrips(h in catalog_hopf()) {
        let s = SpecFile::from_hopf(&h);
        let back = SpecFile::parse(&s.serialize()).unwrap();
        prop_assert_eq!(back.content_hash(), s.content_hash());
        prop_assert_eq!(back.to_hopf().unwrap(), h);
    }

    #[test]
    fn hash_ignores_basis_order(h in catalog_hopf(), shift in 1usize..9) {
        let d = h.dim();
        let f = h.field();
        // φ sends basis i to position i + shift, carrying its label along
        let perm: Vec<usize> = (0..d).map(|i| (i + shift) % d).collect();
        let phi = LinMap::from_columns(f, d, perm.iter().map(|&j| SVec::unit(f, j)).collect());
        let mut labels = vec![String::new(); d];
        for (i, &j) in perm.iter().enumerate() {
            labels[j] = h.labels()[i].clone();
        }
        let t = h.transport(&phi, labels).unwrap();
        prop_assert_eq!(SpecFile::from_hopf(&t).content_hash(), SpecFile::from_hopf(&h).content_hash());
    }

    #[test]
    fn subgroup_roundtrips_on_cyclic_groups(n in 2usize..7, k in 1usize..7) {
        let g = FiniteGroupTable::cyclic(n);
        if n % k == 0 {
            let step = n / k;
            let m: Vec<usize> = (0..k).map(|i| i * step).collect();
            let (a, q) = subgroup_data(Field::Rational, &g, &m).unwrap();
            prop_assert_eq!(a.dim() * q.dim(), n);
            prop_assert!(qsg::correspondence::roundtrip_quotient("C", &q).unwrap().exact);
        }
    }
}
