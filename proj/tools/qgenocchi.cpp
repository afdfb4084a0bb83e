#include <qgenocchi/cli.hpp>

int main(int argc, char **argv)
{
    return qgenocchi::cli::main_entry(argc, argv);
}
