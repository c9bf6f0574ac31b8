use nilcomplex::classify::*;
use nilcomplex::spectral::FrolicherSequence;

#[test]
fn corpus_classes_and_behaviours() {
    for (f, class) in corpus() {
        assert_eq!(classify_checked(&f).unwrap(), class, "{f}");
        let seq = FrolicherSequence::new(&f.equations().unwrap()).unwrap();
        match predicted_behaviour(&f) {
            Ok(b) => assert_eq!(seq.behaviour(), b, "{f}"),
            Err(e) => assert_eq!(class, AlgebraClass::H7, "{f}: {e}"),
        }
    }
}
