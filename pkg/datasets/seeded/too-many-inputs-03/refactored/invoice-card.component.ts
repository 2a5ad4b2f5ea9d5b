import { Component, Input, input } from '@angular/core';

export interface InvoiceCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
  locale: string;
}

@Component({
  selector: 'app-invoice-card',
  template: `<div>{{ config.name }}</div>`
})
export class InvoiceCardComponent {
  @Input() config!: InvoiceCardConfig;
}
