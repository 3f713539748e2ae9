use hirzebruch_core::cohomology::{h0_fe, section_basis};
use hirzebruch_core::lattice::canonical_class;
use hirzebruch_core::linsys::{
    actual_dim, expected_dim, linsys_report, minus_one_reduction, virtual_dim, LinSysSpec,
};
use hirzebruch_core::negcurves::{enumerate_neg_classes, seventy_seven_list, EnumBounds, NegKind};
use hirzebruch_core::positivity::{is_nef, nakai_check, ConeGenerators};
use hirzebruch_core::seshadri::{seshadri_enumerative, seshadri_fe, seshadri_r_e};
use hirzebruch_core::{DivClass, Error, ExactRational, SurfaceModel};

#[test]
fn f36_with_x() {
    let s = SurfaceModel::new(3, 6).with_extra_point();
    let negs = enumerate_neg_classes(&s, &EnumBounds::auto()).unwrap();
    let ones = negs.iter().filter(|c| c.kind == NegKind::MinusOne).count();
    assert_eq!((negs.len(), ones), (480, 240));
    assert_eq!(seventy_seven_list(&s).unwrap().len(), 77);

    let base = SurfaceModel::new(3, 6);
    let l: DivClass = "6,19,4,4,4,4,4,4".parse().unwrap();
    let eps = seshadri_enumerative(&l, &base, &EnumBounds::auto()).unwrap();
    assert_eq!(eps.value, "9/2".parse::<ExactRational>().unwrap());
    assert_eq!(eps.witness.to_string(), "3,9,2,2,2,2,2,2");
}

#[test]
fn nef_and_ample() {
    let s = SurfaceModel::new(2, 0);
    let g = ConeGenerators::build(&s, &EnumBounds::auto()).unwrap();
    assert!(is_nef(&s.f(), &s, &g).unwrap());
    assert!(!nakai_check(&s.f(), &s, &g).unwrap());
    let s = SurfaceModel::new(1, 3);
    let g = ConeGenerators::build(&s, &EnumBounds::auto()).unwrap();
    assert!(nakai_check(&DivClass::new(3, 5, vec![2, 2, 2]), &s, &g).unwrap());
}

#[test]
fn closed_forms() {
    let v = seshadri_fe(2, 7, 3, true).unwrap().value;
    assert_eq!(v, ExactRational::from_integer(1));
    let s = SurfaceModel::new(2, 3);
    let r = seshadri_r_e(&DivClass::new(4, 11, vec![2, 3, 1]), &s).unwrap();
    assert_eq!(r.value, ExactRational::from_integer(4));
    assert!(matches!(seshadri_fe(1, 3, 3, false), Err(Error::InvalidArgument(_))));
}

#[test]
fn dimensions() {
    let spec = LinSysSpec::new(3, 3, 9, vec![2; 6]).unwrap();
    assert_eq!(virtual_dim(&spec).unwrap(), 3);
    assert_eq!(expected_dim(&spec).unwrap(), 3);
    assert_eq!(actual_dim(&spec, 7).unwrap(), 3);
    let spec = LinSysSpec::new(3, 1, 3, vec![1; 5]).unwrap();
    assert_eq!(virtual_dim(&spec).unwrap(), -1);
    assert_eq!(h0_fe(3, 9, 3), 22);
    assert_eq!(section_basis(3, 9, 3).unwrap().len(), 22);
}

#[test]
fn reduction_and_report() {
    let spec = LinSysSpec::new(1, 0, 1, vec![2]).unwrap();
    let s = spec.surface();
    let negs = enumerate_neg_classes(&s, &EnumBounds::auto()).unwrap();
    let red = minus_one_reduction(&spec, &negs).unwrap();
    assert!(red.empty);
    let rep = linsys_report(&spec, &[1, 2, 3], &negs).unwrap();
    assert_eq!(rep.actual_dim, -1);
    assert!(!rep.special && rep.minus_one_special);
}

#[test]
fn canonical_square() {
    for e in 0..6 {
        for r in 0..9 {
            let s = SurfaceModel::new(e, r);
            assert_eq!(s.square(&canonical_class(&s)).unwrap(), 8 - r as i64);
        }
    }
}
