fn main() {
    std::process::exit(contact_bgg::cli::main());
}
