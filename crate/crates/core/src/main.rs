use env_logger::Env;

fn main() {
    env_logger::Builder::from_env(Env::new().filter("DILATION_LOG")).init();
    std::process::exit(spanner_augment::cli::run(std::env::args().collect()));
}
