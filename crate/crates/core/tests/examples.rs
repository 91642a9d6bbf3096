macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " example should run"));
        }
    };
}

example!(axioms);
example!(counital);
example!(comodule_category);
example!(reconstruction);
example!(decomposition);
example!(splitting);
example!(duality);
example!(serialization);
