#include "angres/cli.hpp"

int main(int argc, char** argv) { return angres::run(argc, argv); }
