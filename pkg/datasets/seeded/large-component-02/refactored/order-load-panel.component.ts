import { Component } from '@angular/core';

@Component({
  selector: 'app-order-load-panel',
  template: `<p>{{ loadTotal }}</p>`
})
export class OrderLoadPanelComponent {
  loadTotal = 0;

  loadOrder0(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }

  loadOrder1(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }

  loadOrder2(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }
}
