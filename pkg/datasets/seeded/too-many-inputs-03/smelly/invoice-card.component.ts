import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-invoice-card',
  template: `<div>{{ name }}</div>`
})
export class InvoiceCardComponent {
  @Input() name!: string;
  @Input() age!: number;
  @Input() email!: string;
  @Input() role!: string;
  @Input() isActive!: boolean;
  @Input() showAvatar!: boolean;
  @Input() highlight!: boolean;
  @Input() locale!: string;
}
