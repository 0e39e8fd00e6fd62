// Placeholder main; the real CLI lands with the dsl module.
int main() { return 0; }
