use cpairs_core::catalog::table4_instances;

#[test]
fn every_table4_model_up_to_size_11_validates() {
    let mut built = 0;
    for inst in table4_instances(11) {
        if !inst.has_model() {
            continue;
        }
        let e = inst.build(true).unwrap();
        let rep = e.check();
        assert!(rep.all_passed(), "{}: {:?}", inst.id, rep);
        assert_eq!(e.meta().abstract_type, inst.sub_type);
        built += 1;
    }
    assert!(built > 100, "{built}");
}
