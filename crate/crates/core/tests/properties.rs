use geokiss::geometry::DEFAULT_TOLERANCE;
use geokiss::harness::{
    generate_random_instance, read_report, run_on, write_report, Algorithm, Analysis, Family,
    GenSpec, Instance, Pass,
};
use geokiss::online::Model;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::UnitDisks),
        Just(Family::MixedDisks),
        Just(Family::UnitSquares),
        Just(Family::CongruentSquares),
        Just(Family::RegularKGon(3)),
        Just(Family::RegularKGon(6)),
        Just(Family::UnitBalls),
    ]
}

fn instance(f: Family, n: usize, seed: u64) -> Instance {
    let side = (n as f64).powf(1.0 / f.dimension() as f64) + 1.0;
    let spec = GenSpec {
        width_range: (1.0, 3.0),
        ..GenSpec::new(f, n, side, Model::RelaxedConnected, seed)
    };
    generate_random_instance(&spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_bound_holds_and_survives_the_csv(f in family(), n in 1usize..15, seed in any::<u64>(), t in 0usize..3) {
        let inst = instance(f, n, seed);
        let a = Analysis::new(&inst, DEFAULT_TOLERANCE, 24).unwrap();
        let mut algs = vec![Algorithm::GreedyDs, Algorithm::GreedyCds, Algorithm::FirstFit, Algorithm::RelaxedFirstFit(t)];
        if inst.m.is_some() {
            algs.push(Algorithm::Layer);
        }
        let mut rows = Vec::new();
        for alg in algs {
            rows.extend(run_on(&a, alg).unwrap().records);
        }
        for r in &rows {
            prop_assert_eq!(r.pass, Pass::Pass, "{:?}", r);
        }
        let mut buf = Vec::new();
        write_report(&mut buf, &rows).unwrap();
        let back = read_report(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), rows.len());
        for (x, y) in rows.iter().zip(&back) {
            prop_assert_eq!(x.pass, y.pass);
            prop_assert_eq!(&x.algorithm, &y.algorithm);
        }
    }

    #[test]
    fn instance_files_round_trip(f in family(), n in 1usize..10, seed in any::<u64>()) {
        let inst = instance(f, n, seed);
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("i.json");
        inst.save(&p).unwrap();
        prop_assert_eq!(Instance::load(&p).unwrap(), inst);
    }
}
