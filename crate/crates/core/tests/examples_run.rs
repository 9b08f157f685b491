macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(alphabet, "alphabet.rs");
example!(counting, "counting.rs");
example!(redundancy_table, "redundancy_table.rs");
example!(anr, "anr.rs");
example!(knuth, "knuth.rs");
example!(pb_codec, "pb_codec.rs");
example!(cb_codec, "cb_codec.rs");
example!(cpb_codec, "cpb_codec.rs");
example!(sb_codec, "sb_codec.rs");
example!(prefix_ranking, "prefix_ranking.rs");
example!(sweep, "sweep.rs");
