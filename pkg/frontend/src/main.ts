import { main } from "./app.js";

void main();
